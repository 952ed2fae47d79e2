"""
Verify command.
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


from argparse import ArgumentParser, Namespace
from typing import List

from jinja2 import Environment, PackageLoader

from entclt.config import CHECK_NAMES
from entclt.reports import BoundReport, summarize
from entclt.signals import SignalReceiver
from entclt.tasks import VerifyTask
from entclt.writers import Writer, create_writer

from .base import EXIT_SUCCESS, EXIT_VIOLATION, DistributionCommand, note


__all__ = (
    'VerifyCommand',
)


class SummaryRenderer:
    """
    Renders the closing summary of a verification run.
    """

    def __init__(self) -> None:
        env = Environment(
            autoescape=False,
            keep_trailing_newline=True,
            loader=PackageLoader('entclt', 'templates'),
        )

        self.template = env.get_template('summary.txt')

    def __call__(self, reports: List[BoundReport]) -> str:
        return self.template.render(summarize(reports))


class VerifyPrinter(SignalReceiver):
    """
    Writes bound reports as they arrive.
    """

    def __init__(self, sender: VerifyTask, writer: Writer) -> None:
        super().__init__(sender)
        self.writer = writer

    def on_report(self, sender, report):
        """
        Writes one report.
        """
        self.writer.write(report.to_mapping())


class VerifyCommand(DistributionCommand):
    """
    Verifies every applicable bound along the n grid.
    """

    def extend(self, parser: ArgumentParser) -> None:
        self.add_format(parser)
        self.add_n_grid(parser)
        self.add_tolerances(parser)

        parser.add_argument(
            '--check',
            help="check to run, repeatable; all by default",
            choices=CHECK_NAMES,
            action='append',
            metavar='NAME',
        )

        parser.add_argument(
            '--cap',
            help="largest support size of a sum, in cells",
            type=int,
            metavar='CELLS',
        )

    def run(self, opts: Namespace) -> int:
        config = self.configure(opts)
        task = VerifyTask(self.load(opts), config, checks=opts.check)
        writer = create_writer(config.output, BoundReport.columns, opts.out)

        with writer, VerifyPrinter(task, writer):
            reports = task.run()

        note(SummaryRenderer()(reports).rstrip())

        if all(report.passed for report in reports):
            return EXIT_SUCCESS
        else:
            return EXIT_VIOLATION
