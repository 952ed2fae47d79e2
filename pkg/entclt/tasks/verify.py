"""
Bound verification task.
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


from typing import Callable, Dict, List, Optional, Sequence

from entclt.binomials import (
    binomial_entropy_gap_check, binomial_relative_entropy_check,
    binomial_upper_check, feller_bound_check,
)
from entclt.config import CHECK_NAMES, RunConfig
from entclt.entropies import (
    entropy_increase_check, entropy_upper_bound_check, max_entropy_check,
    pinsker_check, smoothing_check, solidarity_check,
)
from entclt.lattices import LatticePmf, standardized_view
from entclt.reports import BoundReport
from entclt.signals import Signal

from .base import SumTask


__all__ = (
    'VerifyTask',
)


Check = Callable[[int, LatticePmf, float], Optional[BoundReport]]


class VerifyTask(SumTask):
    """
    Runs every bound check at every n of the grid.
    """
    on_report = Signal('report')

    def __init__(
            self,
            pmf: LatticePmf,
            config: Optional[RunConfig] = None,
            progress: bool = True,
            checks: Optional[Sequence[str]] = None,
            ) -> None:
        """
        Constructor.

        Args:
            pmf: Law of a single summand.
            config: Run settings, or None for defaults.
            progress: Enable to show a progress bar.
            checks: Names of the checks to run, or None for all.

        Raises:
            ValueError: If a check name is unknown.
        """
        super().__init__(pmf, config, progress)

        if checks is None:
            checks = CHECK_NAMES

        unknown = sorted(set(checks) - set(CHECK_NAMES))

        if unknown:
            raise ValueError(f"Unknown checks: {unknown}")

        self.checks = [name for name in CHECK_NAMES if name in checks]
        self.table: Dict[str, Check] = {
            'solidarity': self.solidarity,
            'uniform_smoothing': self.uniform_smoothing,
            'max_entropy': self.max_entropy,
            'entropy_upper_bound': self.entropy_upper_bound,
            'entropy_increase': self.entropy_increase,
            'pinsker': self.pinsker,
            'binomial_entropy': self.binomial_entropy,
            'binomial_upper': self.binomial_upper,
            'binomial_relative_entropy': self.binomial_relative_entropy,
            'feller': self.feller,
        }

    @property
    def is_fair_coin(self) -> bool:
        """
        True if the base law is a two-point law with equal weights.
        """
        weights = self.base.weights
        return len(weights) == 2 and abs(weights[0] - weights[1]) <= 1e-12

    def sum_args(self, n: int, p_Sn: LatticePmf) -> tuple:
        return p_Sn, n, self.span, self.variance

    def solidarity(self, n, p_Sn, tol):
        return solidarity_check(*self.sum_args(n, p_Sn), tolerance=tol)

    def uniform_smoothing(self, n, p_Sn, tol):
        return smoothing_check(*self.sum_args(n, p_Sn), tolerance=tol)

    def max_entropy(self, n, p_Sn, tol):
        return max_entropy_check(*self.sum_args(n, p_Sn), tolerance=tol)

    def entropy_upper_bound(self, n, p_Sn, tol):
        args = self.sum_args(n, p_Sn)
        return entropy_upper_bound_check(*args, tolerance=tol)

    def entropy_increase(self, n, p_Sn, tol):
        return entropy_increase_check(self.base, p_Sn, n, tolerance=tol)

    def pinsker(self, n, p_Sn, tol):
        view = standardized_view(p_Sn, n, self.moments)
        return pinsker_check(view, n, tolerance=tol)

    def binomial_entropy(self, n, p_Sn, tol):
        if not self.is_fair_coin or n < 2:
            return None

        return binomial_entropy_gap_check(n, tolerance=tol)

    def binomial_upper(self, n, p_Sn, tol):
        if not self.is_fair_coin:
            return None

        return binomial_upper_check(n, tolerance=tol)

    def binomial_relative_entropy(self, n, p_Sn, tol):
        if not self.is_fair_coin or n < 2:
            return None

        return binomial_relative_entropy_check(n, tolerance=tol)

    def feller(self, n, p_Sn, tol):
        if not self.is_fair_coin or n < 2 or n % 2:
            return None

        return feller_bound_check(n, tolerance=tol)

    def run(self) -> List[BoundReport]:
        """
        Runs the checks, emitting reports ordered by n.

        Checks that do not apply to the base law or to n are reported
        as skipped.
        """
        self.start()
        reports = []

        for n, p_Sn in self.sums():
            for name in self.checks:
                tol = self.config.tolerance(name)
                report = self.table[name](n, p_Sn, tol)

                if report is None:
                    report = BoundReport.skip(name, n)

                self.on_report(report)
                reports.append(report)

        return reports
