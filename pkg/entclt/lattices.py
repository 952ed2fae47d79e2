"""
Lattice probability mass functions.
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
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.signal import fftconvolve

from entclt.exceptions import DistributionError, LatticeError
from entclt.utils import clamp_negatives, compensated_sum, nearest_integer


__all__ = (
    'DEFAULT_FFT_THRESHOLD',
    'LatticePmf',
    'Moments',
    'aligned',
    'convolve',
    'convolve_direct',
    'convolve_transform',
    'make_pmf',
    'moments',
    'reduce_to_maximal_span',
    'self_convolve',
    'standardized_view',
    'total_variation',
)


Weights = Union[np.ndarray, Sequence[float]]


DEFAULT_FFT_THRESHOLD = 256
MASS_TOLERANCE = 1e-12
OFFSET_TOLERANCE = 1e-9
SPAN_TOLERANCE = 1e-12

#
# Tail weights below this are round-off dust and get dropped. Transform
# round-off is near 1e-19, so transformed sums can keep a few near-empty
# tail cells that exact arithmetic would not.
#

DUST = 1e-300


@dataclass(frozen=True)
class Moments:
    """
    Mean and variance of a law.
    """
    mean: float
    variance: float

    def __post_init__(self) -> None:
        if not self.variance >= 0.0:
            raise ValueError(f"Negative variance: {self.variance}")

    @property
    def std(self) -> float:
        """
        Standard deviation.
        """
        return math.sqrt(self.variance)


class LatticePmf:
    """
    Finitely supported probability mass function on a lattice.

    Weight `j` sits at `offset + (first_index + j) * span`. Instances
    never change after construction, so they may be shared freely.
    """

    def __init__(
            self,
            offset: float,
            span: float,
            first_index: int,
            weights: Weights,
            ) -> None:
        """
        Constructor.

        Args:
            offset: Anchor of the lattice.
            span: Distance between lattice points.
            first_index: Lattice index of the first weight.
            weights: Probabilities, trimmed at both ends.

        Raises:
            DistributionError: If the arguments do not form a pmf.
        """
        array = np.array(weights, dtype=float)

        if not (math.isfinite(span) and 0.0 < span):
            raise DistributionError(f"Span must be positive, got {span}.")

        if not math.isfinite(offset):
            raise DistributionError(f"Offset must be finite, got {offset}.")

        if array.ndim != 1 or array.size == 0:
            raise DistributionError("Weights must be a nonempty sequence.")

        if not np.all(np.isfinite(array)):
            raise DistributionError("Weights must be finite.")

        if np.any(array < 0.0):
            raise DistributionError("Weights must not be negative.")

        if array[0] <= 0.0 or array[-1] <= 0.0:
            raise DistributionError("Support must be trimmed.")

        array.setflags(write=False)

        self._offset = float(offset)
        self._span = float(span)
        self._first_index = int(first_index)
        self._weights = array

        self.check_mass(self.mass)

    def check_mass(self, mass: float) -> None:
        """
        Validates the total mass of the weights.

        Raises:
            DistributionError: If the mass is not one.
        """
        if MASS_TOLERANCE < abs(mass - 1.0):
            raise DistributionError(f"Weights sum to {mass!r}, not 1.")

    @property
    def offset(self) -> float:
        return self._offset

    @property
    def span(self) -> float:
        return self._span

    @property
    def first_index(self) -> int:
        return self._first_index

    @property
    def last_index(self) -> int:
        return self._first_index + len(self) - 1

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def mass(self) -> float:
        """
        Total mass of the stored weights.
        """
        return compensated_sum(self._weights)

    @property
    def indices(self) -> np.ndarray:
        """
        Lattice index of every stored weight.
        """
        return np.arange(self.first_index, self.last_index + 1)

    @property
    def points(self) -> np.ndarray:
        """
        Real coordinate of every stored weight.
        """
        return self.offset + self.indices * self.span

    @property
    def is_degenerate(self) -> bool:
        """
        True for point masses, whose maximal span is undefined.
        """
        return len(self) == 1

    def shifted(self, constant: float) -> 'LatticePmf':
        """
        Returns the law of X + c.

        Args:
            constant: The real constant c.
        """
        return LatticePmf(
            offset=self.offset + constant,
            span=self.span,
            first_index=self.first_index,
            weights=self.weights,
        )

    def to_mapping(self) -> Dict[str, Any]:
        """
        Returns the JSON distribution spec of this law.
        """
        return {
            'offset': self.offset + self.first_index * self.span,
            'span': self.span,
            'weights': self.weights.tolist(),
        }

    @classmethod
    def from_mapping(cls, data: Any) -> 'LatticePmf':
        """
        Creates a law from a JSON distribution spec.

        Args:
            data: Mapping with offset, span and weights.

        Raises:
            DistributionError: If the spec is malformed.
        """
        if not isinstance(data, dict):
            raise DistributionError("Distribution spec must be an object.")

        missing = {'offset', 'span', 'weights'} - data.keys()

        if missing:
            raise DistributionError(f"Missing keys: {sorted(missing)}")

        try:
            offset = float(data['offset'])
            span = float(data['span'])
            weights = [float(w) for w in data['weights']]
        except (TypeError, ValueError) as e:
            raise DistributionError("Malformed distribution spec.") from e

        return make_pmf(offset, span, weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __repr__(self) -> str:
        return (
            f"<{type(self).__name__} offset={self.offset!r} "
            f"span={self.span!r} first_index={self.first_index} "
            f"size={len(self)}>"
        )


def trim(weights: np.ndarray, dust: float = DUST) -> Tuple[int, np.ndarray]:
    """
    Drops dust from both tails.

    Args:
        weights: Nonnegative weights.
        dust: Largest weight that counts as empty.

    Returns:
        Number of weights dropped on the left, and the kept weights.

    Raises:
        DistributionError: If every weight is dust.
    """
    keep = np.flatnonzero(dust < weights)

    if keep.size == 0:
        raise DistributionError("Weights must have positive mass.")

    lo, hi = int(keep[0]), int(keep[-1])

    return lo, weights[lo:hi + 1]


def normalised(
        offset: float,
        span: float,
        first_index: int,
        weights: np.ndarray,
        ) -> LatticePmf:
    """
    Trims and rescales nonnegative weights into a pmf.
    """
    skipped, kept = trim(weights)
    total = compensated_sum(kept)

    return LatticePmf(offset, span, first_index + skipped, kept / total)


def make_pmf(
        offset: float,
        span: float,
        weights: Weights,
        first_index: int = 0,
        ) -> LatticePmf:
    """
    Creates a normalised, trimmed pmf from raw weights.

    Args:
        offset: Anchor of the lattice.
        span: Distance between lattice points.
        weights: Nonnegative weights, in any scale.
        first_index: Lattice index of the first weight.

    Raises:
        DistributionError: If the weights or span are invalid.
    """
    array = np.array(weights, dtype=float)

    if not (math.isfinite(span) and 0.0 < span):
        raise DistributionError(f"Span must be positive, got {span}.")

    if array.ndim != 1 or array.size == 0:
        raise DistributionError("Weights must be a nonempty sequence.")

    if not np.all(np.isfinite(array)):
        raise DistributionError("Weights must be finite.")

    if np.any(array < 0.0):
        raise DistributionError("Weights must not be negative.")

    if not np.any(0.0 < array):
        raise DistributionError("Weights must have positive mass.")

    return normalised(offset, span, first_index, array)


def reduce_to_maximal_span(p: LatticePmf) -> LatticePmf:
    """
    Rewrites a pmf on the coarsest lattice containing its support.

    The new span is the old one times the greatest common divisor of
    the index gaps, so it is found without floating point inference.

    Args:
        p: The pmf to reduce.

    Returns:
        An equivalent pmf, or `p` itself if its span is already maximal.
    """
    positions = np.flatnonzero(0.0 < p.weights)

    if positions.size < 2:
        return p

    divisor = int(np.gcd.reduce(np.diff(positions)))

    if divisor == 1:
        return p

    return LatticePmf(
        offset=p.offset + p.first_index * p.span,
        span=p.span * divisor,
        first_index=0,
        weights=p.weights[::divisor],
    )


def moments(p: LatticePmf) -> Moments:
    """
    Computes the exact mean and variance of a pmf.

    Sums run over lattice indices and are rescaled afterwards, which
    keeps large offsets from eating into the variance.
    """
    weights = p.weights
    index = np.arange(len(p), dtype=float)
    mass = p.mass

    centre = compensated_sum(weights * index) / mass
    spread = compensated_sum(weights * (index - centre) ** 2) / mass

    return Moments(
        mean=p.offset + (p.first_index + centre) * p.span,
        variance=spread * p.span ** 2,
    )


def check_spans(p: LatticePmf, q: LatticePmf) -> None:
    """
    Raises LatticeError unless both pmfs share a span.
    """
    if not math.isclose(p.span, q.span, rel_tol=SPAN_TOLERANCE):
        raise LatticeError(f"Mismatched spans: {p.span} and {q.span}.")


def convolve_direct(p: LatticePmf, q: LatticePmf) -> np.ndarray:
    """
    Returns the raw weights of p * q by quadratic-time summation.
    """
    return np.convolve(p.weights, q.weights)


def convolve_transform(p: LatticePmf, q: LatticePmf) -> np.ndarray:
    """
    Returns the raw weights of p * q by fast Fourier transform.
    """
    return fftconvolve(p.weights, q.weights)


def convolve(
        p: LatticePmf,
        q: LatticePmf,
        threshold: Optional[int] = None,
        ) -> LatticePmf:
    """
    Computes the law of X + Y for independent X ~ p and Y ~ q.

    Args:
        p: Law of X.
        q: Law of Y, on a lattice with the same span.
        threshold: Output size from which transforms are used.

    Raises:
        LatticeError: If the spans differ.
        NumericalIntegrityError: If round-off exceeds the clamp limit.
    """
    check_spans(p, q)

    if threshold is None:
        threshold = DEFAULT_FFT_THRESHOLD

    size = len(p) + len(q) - 1

    if size < threshold:
        raw = convolve_direct(p, q)
    else:
        raw = convolve_transform(p, q)

    return normalised(
        offset=p.offset + q.offset,
        span=p.span,
        first_index=p.first_index + q.first_index,
        weights=clamp_negatives(raw),
    )


def self_convolve(
        p: LatticePmf,
        n: int,
        threshold: Optional[int] = None,
        ) -> LatticePmf:
    """
    Computes the law of the sum of n independent copies of X ~ p.

    Uses binary exponentiation, so only O(log n) convolutions are done.

    Raises:
        ValueError: If n is less than one.
    """
    if n < 1:
        raise ValueError(f"Expected n >= 1, got {n}.")

    result: Optional[LatticePmf] = None
    power = p

    while n:
        if n & 1:
            if result is None:
                result = power
            else:
                result = convolve(result, power, threshold)

        n >>= 1

        if n:
            power = convolve(power, power, threshold)

    assert result is not None

    return result


def standardized_view(
        p_Sn: LatticePmf,
        n: int,
        base_moments: Moments,
        ) -> LatticePmf:
    """
    Relabels the law of a partial sum as that of (S - n mu) / sqrt(n).

    Weights are unchanged, so the discrete entropy is too.

    Args:
        p_Sn: Law of the partial sum of n summands.
        n: Number of summands.
        base_moments: Moments of a single summand.
    """
    if n < 1:
        raise ValueError(f"Expected n >= 1, got {n}.")

    root = math.sqrt(n)

    return LatticePmf(
        offset=(p_Sn.offset - n * base_moments.mean) / root,
        span=p_Sn.span / root,
        first_index=p_Sn.first_index,
        weights=p_Sn.weights,
    )


def aligned(
        p: LatticePmf,
        q: LatticePmf,
        ) -> Tuple[int, np.ndarray, np.ndarray]:
    """
    Lays two pmfs out on the union of their index ranges.

    Indices are relative to the anchor of `p`.

    Returns:
        The first index of the union, and both weight arrays on it.

    Raises:
        LatticeError: If spans differ or offsets are incommensurable.
    """
    check_spans(p, q)

    shift = nearest_integer(
        (q.offset - p.offset) / p.span,
        tolerance=OFFSET_TOLERANCE,
    )

    if shift is None:
        raise LatticeError("Lattice offsets are incommensurable.")

    q_first = q.first_index + shift
    q_last = q.last_index + shift

    lo = min(p.first_index, q_first)
    hi = max(p.last_index, q_last)

    wp = np.zeros(hi - lo + 1)
    wq = np.zeros(hi - lo + 1)

    wp[p.first_index - lo:p.last_index - lo + 1] = p.weights
    wq[q_first - lo:q_last - lo + 1] = q.weights

    return lo, wp, wq


def total_variation(p: LatticePmf, q: LatticePmf) -> float:
    """
    Computes half the l1 distance between two pmfs on a common grid.

    Raises:
        LatticeError: If the pmfs do not share a grid.
    """
    _, wp, wq = aligned(p, q)
    distance = 0.5 * compensated_sum(np.abs(wp - wq))

    return min(max(distance, 0.0), 1.0)
