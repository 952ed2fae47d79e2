"""
Base command.
"""


#
# Entclt, exact computations for the discrete entropic CLT.
# Copyright (C) 2026  Entclt developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#


import sys
from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace
from typing import Dict

import arrow

from entclt.config import RunConfig, parse_n_grid, parse_tolerance
from entclt.exceptions import EntcltError
from entclt.flavors import OutputFormat
from entclt.lattices import LatticePmf, reduce_to_maximal_span
from entclt.loaders import load_distribution


__all__ = (
    'Command',
    'DistributionCommand',
)


#
# Exit statuses shared by all commands.
#

EXIT_SUCCESS = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2


class Command(ABC):
    """
    Command line interface for tasks.
    """

    @abstractmethod
    def __call__(self, *args: str) -> int:
        """
        Runs the command.

        Args:
            *args: Command line arguments.

        Returns:
            Application exit status.

        Raises:
            SystemExit: If the arguments are invalid.
        """


def note(*args: object) -> None:
    """
    Prints a diagnostic line to standard error.
    """
    print(*args, file=sys.stderr)


class DistributionCommand(Command):
    """
    Command operating on a single base law.
    """

    @property
    def parser(self) -> ArgumentParser:
        """
        Returns a command line arguments parser.
        """
        parser = ArgumentParser(
            prog='',
            description=self.__doc__,
        )

        parser.add_argument(
            '--dist',
            help="distribution file, or a name like bern:0.5",
            required=True,
            metavar='SOURCE',
        )

        parser.add_argument(
            '--config',
            help="config file, overriding the environment",
            metavar='PATH',
        )

        parser.add_argument(
            '--out',
            help="output file instead of standard output",
            metavar='PATH',
        )

        self.extend(parser)

        return parser

    def extend(self, parser: ArgumentParser) -> None:
        """
        Adds command specific arguments.
        """

    def add_format(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            '--format',
            help="output format",
            choices=[flavor.label for flavor in OutputFormat],
        )

    def add_n_grid(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            '--n-grid',
            help="comma separated sample sizes",
            type=parse_n_grid,
            metavar='LIST',
        )

    def add_tolerances(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            '--tol',
            help="tolerance override, repeatable",
            type=parse_tolerance,
            action='append',
            default=[],
            metavar='NAME=VALUE',
        )

    def configure(self, opts: Namespace) -> RunConfig:
        """
        Returns the config file settings with flags applied on top.

        Args:
            opts: Parsed command line arguments.
        """
        config = RunConfig.load(opts.config)
        tolerances: Dict[str, float] = dict(getattr(opts, 'tol', []))

        fmt = None
        if getattr(opts, 'format', None):
            fmt = OutputFormat.parse(opts.format)

        return config.override(
            n_grid=getattr(opts, 'n_grid', None),
            tolerances=tolerances,
            output=fmt,
            cap=getattr(opts, 'cap', None),
            de_bruijn_cap=getattr(opts, 'de_bruijn_cap', None),
            t_nodes=getattr(opts, 'quad_points', None),
        )

    def load(self, opts: Namespace) -> LatticePmf:
        """
        Loads the base law and reduces it to its maximal span.
        """
        pmf = load_distribution(opts.dist)
        reduced = reduce_to_maximal_span(pmf)

        if reduced is not pmf:
            note(f"Span: {pmf.span} reduced to {reduced.span}")

        return reduced

    @abstractmethod
    def run(self, opts: Namespace) -> int:
        """
        Runs the command with parsed arguments.

        Returns:
            Application exit status.
        """

    def __call__(self, *args: str) -> int:
        opts = self.parser.parse_args(args)
        note(f"Started: {arrow.now()}")

        try:
            code = self.run(opts)
        except (EntcltError, ValueError, OSError) as e:
            note(f"Error: {e}")
            return EXIT_INPUT_ERROR

        note(f"Done: {arrow.now()}")

        return code
