"""
De Bruijn command.
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

from entclt.exceptions import SupportCapError
from entclt.lattices import moments, self_convolve
from entclt.reports import BoundReport
from entclt.smoothing import de_bruijn_check
from entclt.tasks.base import support_size
from entclt.writers import create_writer

from .base import EXIT_SUCCESS, EXIT_VIOLATION, DistributionCommand, note


__all__ = (
    'DeBruijnCommand',
)


class DeBruijnCommand(DistributionCommand):
    """
    Checks the integral form of de Bruijn's identity at one n.
    """

    def extend(self, parser: ArgumentParser) -> None:
        self.add_format(parser)
        self.add_tolerances(parser)

        parser.add_argument(
            '--n',
            help="number of summands",
            type=int,
            required=True,
        )

        parser.add_argument(
            '--quad-points',
            help="number of quadrature nodes along the Gaussian path",
            type=int,
            metavar='COUNT',
        )

        parser.add_argument(
            '--cap',
            help="largest accepted number of summands",
            type=int,
            dest='de_bruijn_cap',
            metavar='N',
        )

    def run(self, opts: Namespace) -> int:
        config = self.configure(opts)
        cap = config.de_bruijn_cap

        if cap < opts.n:
            raise SupportCapError(
                f"Refusing n = {opts.n} above the cap of {cap}."
            )

        pmf = self.load(opts)

        if config.cap < support_size(pmf, opts.n):
            raise SupportCapError(
                f"Sum would exceed the cap of {config.cap} cells."
            )

        stats = moments(pmf)
        p_Sn = self_convolve(pmf, opts.n, config.fft_threshold)

        report = de_bruijn_check(
            p_Sn,
            opts.n,
            pmf.span,
            stats.variance,
            quad_points=config.t_nodes,
            tolerance=config.tolerance('de_bruijn'),
            spatial_tol=config.spatial_tol,
            cap=cap,
        )

        note(f"Relative entropy: {report.lhs:.12g}")
        note(f"Path integral: {report.rhs:.12g}")
        note(f"Residual: {report.residual:.3e}")

        columns = BoundReport.columns

        with create_writer(config.output, columns, opts.out) as writer:
            writer.write(report.to_mapping())

        if report.passed:
            return EXIT_SUCCESS
        else:
            return EXIT_VIOLATION
