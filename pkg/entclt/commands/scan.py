"""
Scan command.
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

from entclt.signals import SignalReceiver
from entclt.tasks import ScanRow, ScanTask
from entclt.writers import Writer, create_writer

from .base import EXIT_SUCCESS, DistributionCommand, note


__all__ = (
    'ScanCommand',
)


class ScanPrinter(SignalReceiver):
    """
    Writes scan rows as they arrive.
    """

    def __init__(self, sender: ScanTask, writer: Writer) -> None:
        super().__init__(sender)
        self.writer = writer

    def on_start(self, sender, base, moments):
        """
        Shows the base law.
        """
        note(f"Support: {len(base)} points, span {base.span}")
        note(f"Moments: mean {moments.mean:.12g}, "
             f"variance {moments.variance:.12g}")

    def on_row(self, sender, row):
        """
        Writes one row.
        """
        self.writer.write(row.to_mapping())


class ScanCommand(DistributionCommand):
    """
    Tabulates convergence of a base law towards the Gaussian.
    """

    def extend(self, parser: ArgumentParser) -> None:
        self.add_format(parser)
        self.add_n_grid(parser)

        parser.add_argument(
            '--cap',
            help="largest support size of a sum, in cells",
            type=int,
            metavar='CELLS',
        )

    def run(self, opts: Namespace) -> int:
        config = self.configure(opts)
        task = ScanTask(self.load(opts), config)
        writer = create_writer(config.output, ScanRow._fields, opts.out)

        with writer, ScanPrinter(task, writer):
            task.run()

        return EXIT_SUCCESS
