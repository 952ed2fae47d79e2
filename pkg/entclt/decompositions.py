"""
Bernoulli part decompositions.
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
from typing import Any, Dict, Iterable, List, NamedTuple, Optional

import numpy as np

from entclt.exceptions import (
    DegenerateDistributionError, LatticeError, NumericalIntegrityError,
)
from entclt.lattices import (
    LatticePmf, Moments, aligned, moments, normalised,
    reduce_to_maximal_span, self_convolve,
)
from entclt.utils import CLAMP_LIMIT, clamp_negatives, compensated_sum


__all__ = (
    'BernoulliPartDecomposition',
    'SumDecomposition',
    'VarianceTrendRow',
    'conditional_variance_trend',
    'decompose',
    'reconstruct',
    'sum_decomposition',
)


class BernoulliPartDecomposition:
    """
    Joint law of (V, W) such that X has the law of V + W B.

    Here W ~ Bern(q) and B ~ Bern(1/2) is independent of (V, W). Entry
    `j` of both joint rows belongs to lattice index `first_index + j`
    of the decomposed pmf.
    """

    def __init__(
            self,
            offset: float,
            span: float,
            first_index: int,
            joint0: np.ndarray,
            joint1: np.ndarray,
            ) -> None:
        """
        Constructor.

        Args:
            offset: Anchor of the lattice.
            span: Distance between lattice points.
            first_index: Lattice index of the first joint entry.
            joint0: Values of p(V = k, W = 0).
            joint1: Values of p(V = k, W = 1).
        """
        joint0 = np.array(joint0, dtype=float)
        joint1 = np.array(joint1, dtype=float)

        if joint0.shape != joint1.shape or joint0.ndim != 1:
            raise ValueError("Joint rows must have equal length.")

        if np.any(joint0 < 0.0) or np.any(joint1 < 0.0):
            raise NumericalIntegrityError("Negative joint probability.")

        joint0.setflags(write=False)
        joint1.setflags(write=False)

        self.offset = offset
        self.span = span
        self.first_index = first_index
        self.joint0 = joint0
        self.joint1 = joint1

    @property
    def q(self) -> float:
        """
        Probability that W is one.
        """
        return compensated_sum(self.joint1)

    def law_given_w(self, w: int) -> Optional[LatticePmf]:
        """
        Returns the conditional law of V given W = w.

        Args:
            w: Either zero or one.

        Returns:
            The law, or None if W never takes the value.
        """
        if w == 0:
            row = self.joint0
        elif w == 1:
            row = self.joint1
        else:
            raise ValueError(f"Expected w in (0, 1), got {w}.")

        if not np.any(0.0 < row):
            return None

        return normalised(self.offset, self.span, self.first_index, row)

    def to_mapping(self) -> Dict[str, Any]:
        """
        Returns a JSON-ready mapping of q, lattice and joint table.
        """
        joint = []

        for w, row in enumerate((self.joint0, self.joint1)):
            for j, value in enumerate(row.tolist()):
                joint.append([self.first_index + j, w, value])

        return {
            'q': self.q,
            'lattice': {
                'offset': self.offset,
                'span': self.span,
            },
            'joint': joint,
        }

    def __repr__(self) -> str:
        return f"<BernoulliPartDecomposition q={self.q!r}>"


def decompose(
        p: LatticePmf,
        limit: float = CLAMP_LIMIT,
        ) -> BernoulliPartDecomposition:
    """
    Splits a Bernoulli step off a lattice law.

    Adjacent lattice points k and k + 1 share min(p(k), p(k + 1)) as
    joint mass with W = 1, half of which each of them gives up.

    Args:
        p: A nondegenerate pmf on its maximal lattice.
        limit: Largest tolerated negative joint mass.

    Raises:
        DegenerateDistributionError: If p is a point mass.
        LatticeError: If the span of p is not maximal, or no two
            support points are adjacent.
        NumericalIntegrityError: If a joint value is clearly negative.
    """
    if p.is_degenerate:
        raise DegenerateDistributionError("Cannot decompose a point mass.")

    if reduce_to_maximal_span(p) is not p:
        raise LatticeError("Span must be maximal; reduce the pmf first.")

    weights = p.weights

    joint1 = np.zeros(len(p))
    joint1[:-1] = np.minimum(weights[:-1], weights[1:])

    before = np.concatenate(([0.0], joint1[:-1]))
    joint0 = weights - 0.5 * (before + joint1)

    if np.any(joint0 < -limit):
        raise NumericalIntegrityError("Joint mass is negative.")

    joint0 = np.clip(joint0, 0.0, None)

    if not np.any(0.0 < joint1):
        raise LatticeError("No two support points are adjacent.")

    return BernoulliPartDecomposition(
        offset=p.offset,
        span=p.span,
        first_index=p.first_index,
        joint0=joint0,
        joint1=joint1,
    )


def reconstruct(d: BernoulliPartDecomposition) -> LatticePmf:
    """
    Returns the law of V + W B for a decomposition.
    """
    half = 0.5 * d.joint1
    before = np.concatenate(([0.0], half[:-1]))
    weights = d.joint0 + half + before

    if 0.0 < half[-1]:
        weights = np.append(weights, half[-1])

    return normalised(d.offset, d.span, d.first_index, weights)


class SumDecomposition(NamedTuple):
    """
    Split of a partial sum on whether any summand had W = 1.
    """
    n: int
    q: float
    q_n: float
    law_given_w1: LatticePmf
    law_given_w0: Optional[LatticePmf]
    cond_moments_w1: Moments

    def mixture(self) -> LatticePmf:
        """
        Returns the law of total probability applied to both branches.
        """
        if self.law_given_w0 is None:
            return self.law_given_w1

        lo, w1, w0 = aligned(self.law_given_w1, self.law_given_w0)
        weights = self.q_n * w1 + (1.0 - self.q_n) * w0
        law = self.law_given_w1

        return normalised(law.offset, law.span, lo, weights)


def sum_decomposition(
        p: LatticePmf,
        n: int,
        threshold: Optional[int] = None,
        limit: float = CLAMP_LIMIT,
        ) -> SumDecomposition:
    """
    Decomposes the sum of n independent copies of X ~ p.

    With all W equal to zero the sum is a sum of V's drawn given
    W = 0. The law given some W equal to one is what remains of the
    full law after removing that branch.

    Args:
        p: A nondegenerate pmf on its maximal lattice.
        n: Number of summands.
        threshold: Output size from which transforms are used.
        limit: Largest tolerated clamped mass.
    """
    if n < 1:
        raise ValueError(f"Expected n >= 1, got {n}.")

    part = decompose(p, limit)
    p_Sn = self_convolve(p, n, threshold)
    single = part.law_given_w(0)

    if single is None:
        return SumDecomposition(
            n=n,
            q=1.0,
            q_n=1.0,
            law_given_w1=p_Sn,
            law_given_w0=None,
            cond_moments_w1=moments(p_Sn),
        )

    q = part.q
    log_miss = n * math.log1p(-q)
    q_n = -math.expm1(log_miss)

    given_w0 = self_convolve(single, n, threshold)
    lo, full, rest = aligned(p_Sn, given_w0)

    raw = (full - math.exp(log_miss) * rest) / q_n
    given_w1 = normalised(
        offset=p_Sn.offset,
        span=p_Sn.span,
        first_index=lo,
        weights=clamp_negatives(raw, limit),
    )

    return SumDecomposition(
        n=n,
        q=q,
        q_n=q_n,
        law_given_w1=given_w1,
        law_given_w0=given_w0,
        cond_moments_w1=moments(given_w1),
    )


class VarianceTrendRow(NamedTuple):
    """
    Conditional moments of a partial sum given W = 1.
    """
    n: int
    q_n: float
    ratio: float
    mean_shift: float


def conditional_variance_trend(
        p: LatticePmf,
        n_values: Iterable[int],
        threshold: Optional[int] = None,
        ) -> List[VarianceTrendRow]:
    """
    Tabulates Var(S_n | W = 1) / (n sigma^2) and E(S_n | W = 1) - n mu.

    Both should approach one and zero respectively as n grows.
    """
    base = moments(p)

    if base.variance <= 0.0:
        raise DegenerateDistributionError("Pmf has zero variance.")

    rows = []

    for n in n_values:
        split = sum_decomposition(p, n, threshold)
        cond = split.cond_moments_w1

        rows.append(VarianceTrendRow(
            n=n,
            q_n=split.q_n,
            ratio=cond.variance / (n * base.variance),
            mean_shift=cond.mean - n * base.mean,
        ))

    return rows
