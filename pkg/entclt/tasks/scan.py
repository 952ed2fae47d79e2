"""
Convergence scan task.
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


import math
from typing import Any, Dict, List, NamedTuple

from entclt.entropies import (
    entropy_gap, smoothed_relative_entropy, solidarity_check,
    standardized_relative_entropy, total_variation_to_gaussian,
)
from entclt.lattices import LatticePmf, standardized_view
from entclt.signals import Signal

from .base import SumTask


__all__ = (
    'ScanRow',
    'ScanTask',
)


class ScanRow(NamedTuple):
    """
    Distances to Gaussianity of one partial sum.
    """
    n: int
    entropy_gap: float
    relative_entropy: float
    smoothed_relative_entropy: float
    solidarity_slack: float
    tv_to_gaussian: float

    def to_mapping(self) -> Dict[str, Any]:
        return dict(self._asdict())

    @property
    def is_finite(self) -> bool:
        return all(math.isfinite(value) for value in self[1:])


class ScanTask(SumTask):
    """
    Tabulates entropy and relative entropy along the n grid.
    """
    on_row = Signal('row')

    def measure(self, n: int, p_Sn: LatticePmf) -> ScanRow:
        """
        Computes the scan row of one partial sum.
        """
        h = self.span
        sigma2 = self.variance

        view = standardized_view(p_Sn, n, self.moments)

        return ScanRow(
            n=n,
            entropy_gap=entropy_gap(p_Sn, n, h, sigma2),
            relative_entropy=standardized_relative_entropy(p_Sn, n),
            smoothed_relative_entropy=smoothed_relative_entropy(
                p_Sn, n, h, sigma2,
            ),
            solidarity_slack=solidarity_check(p_Sn, n, h, sigma2).slack,
            tv_to_gaussian=total_variation_to_gaussian(view),
        )

    def run(self) -> List[ScanRow]:
        """
        Runs the scan, emitting rows in increasing n.
        """
        self.start()
        rows = []

        for n, p_Sn in self.sums():
            row = self.measure(n, p_Sn)
            self.on_row(row)
            rows.append(row)

        return rows
