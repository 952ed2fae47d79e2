"""
Entropy functionals.
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
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.special import entr, log_ndtr

from entclt.exceptions import DegenerateDistributionError, DistributionError
from entclt.lattices import (
    LatticePmf, Weights, aligned, moments, standardized_view, trim,
)
from entclt.reports import DEFAULT_TOLERANCE, BoundReport
from entclt.utils import compensated_sum


__all__ = (
    'QuantisedGaussianSpec',
    'QuantisedGaussianPmf',
    'entropy',
    'entropy_gap',
    'entropy_increase_check',
    'entropy_upper_bound_check',
    'log_cell_masses',
    'max_entropy_check',
    'pinsker_check',
    'quantized_gaussian',
    'relative_entropy_to_gaussian',
    'smoothed_relative_entropy',
    'smoothing_check',
    'solidarity_check',
    'standardized_relative_entropy',
    'total_variation_to_gaussian',
)


#
# Number of standard deviations covered by automatic index ranges.
#

GAUSSIAN_WINDOW = 12.0

CAPTURE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class QuantisedGaussianSpec:
    """
    Normal law to be binned on the cells of a lattice.

    Each point `offset + k * span` owns the cell reaching up to the
    next lattice point.
    """
    mean: float
    variance: float
    offset: float
    span: float

    def __post_init__(self) -> None:
        if not self.variance > 0.0:
            raise DegenerateDistributionError(
                f"Variance must be positive, got {self.variance}."
            )

        if not self.span > 0.0:
            raise DistributionError(
                f"Span must be positive, got {self.span}."
            )

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    def auto_range(self) -> Tuple[int, int]:
        """
        Returns the index range covering the mean plus-minus twelve
        standard deviations.
        """
        reach = GAUSSIAN_WINDOW * self.std
        lo = (self.mean - reach - self.offset) / self.span
        hi = (self.mean + reach - self.offset) / self.span

        return math.floor(lo) - 1, math.ceil(hi)

    @classmethod
    def matching(cls, p: LatticePmf) -> 'QuantisedGaussianSpec':
        """
        Returns the spec with the moments and lattice of a pmf.

        Raises:
            DegenerateDistributionError: If the pmf is a point mass.
        """
        stats = moments(p)

        if p.is_degenerate or stats.variance <= 0.0:
            raise DegenerateDistributionError("Pmf has zero variance.")

        return cls(
            mean=stats.mean,
            variance=stats.variance,
            offset=p.offset,
            span=p.span,
        )


class QuantisedGaussianPmf(LatticePmf):
    """
    Truncated quantised Gaussian.

    Cells keep their true Gaussian mass, so the weights sum to the
    captured mass instead of one.
    """

    def __init__(
            self,
            offset: float,
            span: float,
            first_index: int,
            weights: Weights,
            captured: float,
            ) -> None:
        """
        Constructor.

        Args:
            offset: Anchor of the lattice.
            span: Distance between lattice points.
            first_index: Lattice index of the first cell.
            weights: Gaussian mass of each cell.
            captured: Total mass of the cells.
        """
        self.captured = captured
        super().__init__(offset, span, first_index, weights)

    def check_mass(self, mass: float) -> None:
        if not 0.0 < mass <= 1.0 + 1e-12:
            raise DistributionError(f"Invalid captured mass: {mass!r}")

    @property
    def deficit(self) -> float:
        """
        Gaussian mass outside the stored cells.
        """
        return max(1.0 - self.captured, 0.0)


def log_cell_masses(lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """
    Computes log(Phi(upper) - Phi(lower)) for standardised cell edges.

    Cells above the mean are mirrored below it first, so both CDF
    values come from the nearer tail and no cancellation occurs.

    Args:
        lower: Lower cell edges, in standard deviations.
        upper: Upper cell edges, in standard deviations.

    Returns:
        Natural logarithms of the cell masses.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)

    flip = 0.0 < lower
    a = np.where(flip, -upper, lower)
    b = np.where(flip, -lower, upper)

    log_a = log_ndtr(a)
    log_b = log_ndtr(b)

    with np.errstate(divide='ignore'):
        return log_b + np.log(-np.expm1(log_a - log_b))


def quantized_gaussian(
        spec: QuantisedGaussianSpec,
        index_range: Optional[Tuple[int, int]] = None,
        ) -> QuantisedGaussianPmf:
    """
    Bins a normal law on the cells of a lattice.

    Args:
        spec: The normal law and lattice.
        index_range: Inclusive range of cell indices, or None to cover
            twelve standard deviations on both sides of the mean.

    Raises:
        DistributionError: If the range captures too little mass.
    """
    if index_range is None:
        index_range = spec.auto_range()

    first, last = index_range

    if last < first:
        raise DistributionError(f"Empty index range: {index_range}")

    index = np.arange(first, last + 1, dtype=float)
    points = spec.offset + index * spec.span

    lower = (points - spec.mean) / spec.std
    upper = (points + spec.span - spec.mean) / spec.std

    cells = np.exp(log_cell_masses(lower, upper))
    captured = compensated_sum(cells)

    if captured < 1.0 - CAPTURE_TOLERANCE:
        raise DistributionError(
            f"Index range captures only {captured!r} of the mass."
        )

    skipped, kept = trim(cells, 0.0)

    return QuantisedGaussianPmf(
        offset=spec.offset,
        span=spec.span,
        first_index=first + skipped,
        weights=kept,
        captured=captured,
    )


def entropy(p: LatticePmf) -> float:
    """
    Computes the discrete entropy of a pmf in nats.
    """
    return compensated_sum(entr(p.weights))


def relative_entropy_to_gaussian(p: LatticePmf) -> float:
    """
    Computes D(p || q) for the quantised Gaussian q matching p.

    The reference has the mean and variance of p and lives on the
    lattice of p. Cell edges are measured in lattice steps from the
    mean, which makes the result invariant under translation and
    under joint rescaling of offset and span.

    Raises:
        DegenerateDistributionError: If p is a point mass.
    """
    if p.is_degenerate:
        raise DegenerateDistributionError("Pmf has zero variance.")

    weights = p.weights
    index = np.arange(len(p), dtype=float)

    mass = p.mass

    centre = compensated_sum(weights * index) / mass
    spread = compensated_sum(weights * (index - centre) ** 2) / mass
    scale = math.sqrt(spread)

    lower = (index - centre) / scale
    upper = (index + 1.0 - centre) / scale

    present = 0.0 < weights
    log_p = np.log(weights[present])
    log_q = log_cell_masses(lower[present], upper[present])

    divergence = compensated_sum(weights[present] * (log_p - log_q))

    return max(divergence, 0.0)


def total_variation_to_gaussian(p: LatticePmf) -> float:
    """
    Computes the total variation between p and its quantised Gaussian.

    Mass of the reference outside its truncation window counts as
    disagreement.
    """
    q = quantized_gaussian(QuantisedGaussianSpec.matching(p))
    _, wp, wq = aligned(p, q)

    distance = 0.5 * (compensated_sum(np.abs(wp - wq)) + q.deficit)

    return min(max(distance, 0.0), 1.0)


def check_sum_args(n: int, h: float, sigma2: float) -> None:
    """
    Validates the arguments shared by the partial sum functionals.
    """
    if n < 1:
        raise ValueError(f"Expected n >= 1, got {n}.")

    if not h > 0.0:
        raise ValueError(f"Expected a positive span, got {h}.")

    if not sigma2 > 0.0:
        raise DegenerateDistributionError(
            f"Expected a positive variance, got {sigma2}."
        )


def step_ratio(n: int, h: float, sigma2: float) -> float:
    """
    Returns h / (sigma sqrt(n)), the standardised lattice step.
    """
    return h / math.sqrt(sigma2 * n)


def normalised_entropy(p_Sn: LatticePmf, n: int, h: float) -> float:
    """
    Returns H(S_n) - log(sqrt(n) / h).
    """
    return entropy(p_Sn) - math.log(math.sqrt(n) / h)


def gaussian_entropy(variance: float) -> float:
    """
    Returns the differential entropy of a normal law.
    """
    return 0.5 * math.log(2.0 * math.pi * math.e * variance)


def entropy_gap(p_Sn: LatticePmf, n: int, h: float, sigma2: float) -> float:
    """
    Computes the entropy deficit of a partial sum.

    Args:
        p_Sn: Law of the sum of n summands.
        n: Number of summands.
        h: Span of a single summand.
        sigma2: Variance of a single summand.

    Returns:
        Gaussian entropy minus the normalised discrete entropy.
    """
    check_sum_args(n, h, sigma2)

    return gaussian_entropy(sigma2) - normalised_entropy(p_Sn, n, h)


def standardized_relative_entropy(p_Sn: LatticePmf, n: int) -> float:
    """
    Returns D of the standardised partial sum.
    """
    stats = moments(p_Sn)
    base = type(stats)(mean=stats.mean / n, variance=stats.variance / n)
    view = standardized_view(p_Sn, n, base)

    return relative_entropy_to_gaussian(view)


def solidarity_check(
        p_Sn: LatticePmf,
        n: int,
        h: float,
        sigma2: float,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks that D of the standardised sum tracks the entropy deficit.

    The distance between the two is at most r (1 + r / 2), where r is
    the standardised lattice step.
    """
    deficit = entropy_gap(p_Sn, n, h, sigma2)
    divergence = standardized_relative_entropy(p_Sn, n)
    r = step_ratio(n, h, sigma2)

    return BoundReport.create(
        name='solidarity',
        lhs=abs(divergence - deficit),
        rhs=r * (1.0 + r / 2.0),
        n=n,
        tolerance=tolerance,
    )


def max_entropy_check(
        p_Sn: LatticePmf,
        n: int,
        h: float,
        sigma2: float,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks the entropy bound of the uniformly smoothed sum.
    """
    check_sum_args(n, h, sigma2)

    return BoundReport.create(
        name='max_entropy',
        lhs=normalised_entropy(p_Sn, n, h),
        rhs=gaussian_entropy(sigma2 + h * h / (12.0 * n)),
        n=n,
        tolerance=tolerance,
    )


def entropy_upper_bound_check(
        p_Sn: LatticePmf,
        n: int,
        h: float,
        sigma2: float,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks the entropy bound implied by solidarity and D >= 0.
    """
    check_sum_args(n, h, sigma2)
    r = step_ratio(n, h, sigma2)

    return BoundReport.create(
        name='entropy_upper_bound',
        lhs=normalised_entropy(p_Sn, n, h),
        rhs=gaussian_entropy(sigma2) + r * (1.0 + r / 2.0),
        n=n,
        tolerance=tolerance,
    )


def smoothed_relative_entropy(
        p_Sn: LatticePmf,
        n: int,
        h: float,
        sigma2: float,
        ) -> float:
    """
    Computes D of the standardised sum plus uniform noise on one cell.

    The smoothed variable has variance sigma2 + h^2 / 12n and its
    differential entropy equals the normalised discrete entropy of
    the sum, so no integration is needed.
    """
    check_sum_args(n, h, sigma2)

    variance = sigma2 + h * h / (12.0 * n)
    divergence = gaussian_entropy(variance) - normalised_entropy(p_Sn, n, h)

    return max(divergence, 0.0)


def smoothing_check(
        p_Sn: LatticePmf,
        n: int,
        h: float,
        sigma2: float,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks that uniform smoothing barely moves the relative entropy.
    """
    smoothed = smoothed_relative_entropy(p_Sn, n, h, sigma2)
    divergence = standardized_relative_entropy(p_Sn, n)
    r = step_ratio(n, h, sigma2)

    return BoundReport.create(
        name='uniform_smoothing',
        lhs=abs(divergence - smoothed),
        rhs=r * (1.0 + 13.0 * r / 24.0),
        n=n,
        tolerance=tolerance,
    )


def pinsker_check(
        p: LatticePmf,
        n: Optional[int] = None,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks 2 TV^2 <= D against the quantised Gaussian matching p.

    Args:
        p: A nondegenerate pmf.
        n: Number of summands, for labelling only.
        tolerance: Accepted violation.
    """
    distance = total_variation_to_gaussian(p)
    divergence = relative_entropy_to_gaussian(p)

    return BoundReport.create(
        name='pinsker',
        lhs=2.0 * distance ** 2,
        rhs=divergence,
        n=n,
        tolerance=tolerance,
    )


def entropy_increase_check(
        p: LatticePmf,
        p_Sn: LatticePmf,
        n: Optional[int] = None,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks that a sum of independent copies has no less entropy.
    """
    return BoundReport.create(
        name='entropy_increase',
        lhs=entropy(p),
        rhs=entropy(p_Sn),
        n=n,
        tolerance=tolerance,
    )
