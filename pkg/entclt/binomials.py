"""
Binomial bounds.
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
from typing import Optional

import numpy as np

from entclt.entropies import relative_entropy_to_gaussian
from entclt.lattices import LatticePmf, make_pmf
from entclt.reports import DEFAULT_TOLERANCE, BoundReport
from entclt.utils import compensated_sum


__all__ = (
    'FELLER_TOLERANCE',
    'BinomialLaw',
    'binomial_entropy_gap_check',
    'binomial_law',
    'binomial_pmf',
    'binomial_relative_entropy_check',
    'binomial_upper_check',
    'feller_bound_check',
)


FELLER_TOLERANCE = 1e-12

#
# Limit of H(Bin(n, 1/2)) - log(sqrt(n)), half of log(pi e / 2).
#

BINOMIAL_LIMIT = 0.5 * math.log(math.pi * math.e / 2.0)


class BinomialLaw:
    """
    Binomial law with weights kept in the log domain.
    """

    def __init__(self, n: int, log_weights: np.ndarray, p: float = 0.5):
        """
        Constructor.

        Args:
            n: Number of trials.
            log_weights: Logarithm of each weight, for k = 0..n.
            p: Success probability of a trial.
        """
        if len(log_weights) != n + 1:
            raise ValueError("Expected one log weight per outcome.")

        log_weights = np.array(log_weights, dtype=float)
        log_weights.setflags(write=False)

        self.n = n
        self.p = p
        self.log_weights = log_weights

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights)

    @property
    def entropy(self) -> float:
        """
        Discrete entropy in nats, free of underflow in the tails.
        """
        weights = self.weights
        present = 0.0 < weights

        return -compensated_sum(weights[present] * self.log_weights[present])

    def to_pmf(self) -> LatticePmf:
        """
        Returns the law as a pmf on {0, ..., n}.
        """
        return make_pmf(0.0, 1.0, self.weights)

    def __repr__(self) -> str:
        return f"<BinomialLaw n={self.n} p={self.p!r}>"


def binomial_law(n: int, p: float = 0.5) -> BinomialLaw:
    """
    Computes a binomial law without factorials.

    Log coefficients come from the ratio C(n, k) / C(n, k - 1) up to
    the middle and are mirrored beyond it, so the symmetric case is
    symmetric bit for bit.

    Args:
        n: Number of trials.
        p: Success probability of a trial.

    Raises:
        ValueError: If n is less than one or p is not in (0, 1).
    """
    if n < 1:
        raise ValueError(f"Expected n >= 1, got {n}.")

    if not 0.0 < p < 1.0:
        raise ValueError(f"Expected 0 < p < 1, got {p}.")

    half = n // 2
    k = np.arange(1, half + 1, dtype=float)
    steps = np.log(n - k + 1.0) - np.log(k)

    head = np.concatenate(([0.0], np.cumsum(steps)))
    coefficients = np.concatenate((head, head[:n - half][::-1]))

    if p == 0.5:
        log_weights = coefficients - n * math.log(2.0)
    else:
        index = np.arange(n + 1, dtype=float)
        log_weights = (
            coefficients
            + index * math.log(p)
            + (n - index) * math.log1p(-p)
        )

    total = compensated_sum(np.exp(log_weights))
    log_weights = log_weights - math.log(total)

    return BinomialLaw(n, log_weights, p)


def binomial_pmf(n: int, p: float = 0.5) -> LatticePmf:
    """
    Returns Bin(n, p) as a pmf on {0, ..., n}.
    """
    return binomial_law(n, p).to_pmf()


def check_at_least_two(n: int) -> None:
    if n < 2:
        raise ValueError(f"Expected n >= 2, got {n}.")


def binomial_entropy_gap_check(
        n: int,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks the distance of the normalised binomial entropy to its
    limit against 4 / sqrt(n).
    """
    check_at_least_two(n)
    law = binomial_law(n)
    gap = law.entropy - 0.5 * math.log(n) - BINOMIAL_LIMIT

    return BoundReport.create(
        name='binomial_entropy',
        lhs=abs(gap),
        rhs=4.0 / math.sqrt(n),
        n=n,
        tolerance=tolerance,
    )


def binomial_upper_check(
        n: int,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks the normalised binomial entropy against its limit plus
    1 / 24n.
    """
    if n < 1:
        raise ValueError(f"Expected n >= 1, got {n}.")

    law = binomial_law(n)

    return BoundReport.create(
        name='binomial_upper',
        lhs=law.entropy - 0.5 * math.log(n),
        rhs=BINOMIAL_LIMIT + 1.0 / (24.0 * n),
        n=n,
        tolerance=tolerance,
    )


def binomial_relative_entropy_check(
        n: int,
        tolerance: float = DEFAULT_TOLERANCE,
        ) -> BoundReport:
    """
    Checks D of the standardised binomial sum against 8 / sqrt(n).
    """
    check_at_least_two(n)
    divergence = relative_entropy_to_gaussian(binomial_pmf(n))

    return BoundReport.create(
        name='binomial_relative_entropy',
        lhs=divergence,
        rhs=8.0 / math.sqrt(n),
        n=n,
        tolerance=tolerance,
    )


def feller_excess(n: int) -> np.ndarray:
    """
    Returns a_k minus its pointwise bound, for k = -n/2 .. n/2.
    """
    if n < 2 or n % 2:
        raise ValueError(f"Expected an even n >= 2, got {n}.")

    law = binomial_law(n)
    k = np.arange(-(n // 2), n // 2 + 1, dtype=float)

    log_bound = (
        -0.5 * math.log(math.pi * n / 2.0)
        - 2.0 * k * k / n
        + 3.0 * np.abs(k) ** 3 / (n * n)
        + 1.0 / (12.0 * n)
    )

    with np.errstate(over='ignore'):
        return law.weights - np.exp(log_bound)


def feller_bound_check(
        n: int,
        tolerance: Optional[float] = None,
        ) -> BoundReport:
    """
    Checks the pointwise local limit bound on the central binomial
    weights a_k = b_n(n/2 + k).

    Raises:
        ValueError: If n is odd or less than two.
    """
    if tolerance is None:
        tolerance = FELLER_TOLERANCE

    excess = feller_excess(n)

    return BoundReport.create(
        name='feller',
        lhs=float(np.max(excess)),
        rhs=0.0,
        n=n,
        tolerance=tolerance,
    )
