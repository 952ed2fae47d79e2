"""
Partial sum task base.
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


from typing import Iterator, Optional, Tuple

from entclt.config import RunConfig
from entclt.exceptions import DegenerateDistributionError, SupportCapError
from entclt.lattices import (
    LatticePmf, Moments, convolve, moments, reduce_to_maximal_span,
    self_convolve,
)
from entclt.signals import Signal, SignalSender
from entclt.utils import tqdm


__all__ = (
    'SumTask',
    'support_size',
)


def support_size(p: LatticePmf, n: int) -> int:
    """
    Returns the number of cells of the law of the sum of n copies.
    """
    return n * (len(p) - 1) + 1


class SumTask(SignalSender):
    """
    Walks the partial sums of a base law along the n grid.
    """
    on_start = Signal('base', 'moments')

    def __init__(
            self,
            pmf: LatticePmf,
            config: Optional[RunConfig] = None,
            progress: bool = True,
            ) -> None:
        """
        Constructor.

        Args:
            pmf: Law of a single summand, reduced to its maximal span.
            config: Run settings, or None for defaults.
            progress: Enable to show a progress bar.

        Raises:
            DegenerateDistributionError: If the law is a point mass.
            SupportCapError: If the largest sum exceeds the cap.
        """
        super().__init__()

        if config is None:
            config = RunConfig()

        base = reduce_to_maximal_span(pmf)

        if base.is_degenerate:
            raise DegenerateDistributionError("Base law is a point mass.")

        largest = support_size(base, config.n_grid[-1])

        if config.cap < largest:
            raise SupportCapError(
                f"Sum would need {largest} cells, above the cap of "
                f"{config.cap}."
            )

        self.base = base
        self.config = config
        self.progress = progress
        self.moments: Moments = moments(base)

    @property
    def span(self) -> float:
        return self.base.span

    @property
    def variance(self) -> float:
        return self.moments.variance

    def sums(self) -> Iterator[Tuple[int, LatticePmf]]:
        """
        Yields each n of the grid with the law of the sum.

        Each law is built from the previous one, so only the increments
        are convolved from scratch.
        """
        threshold = self.config.fft_threshold
        grid = self.config.n_grid

        current: Optional[LatticePmf] = None
        previous = 0

        for n in tqdm(grid, disable=not self.progress):
            step = self_convolve(self.base, n - previous, threshold)

            if current is None:
                current = step
            else:
                current = convolve(current, step, threshold)

            previous = n

            yield n, current

    def start(self) -> None:
        self.on_start(self.base, self.moments)
