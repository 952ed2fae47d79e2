"""
Various utilities.
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
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np
from tqdm import tqdm as _tqdm

from entclt.exceptions import NumericalIntegrityError


__all__ = (
    'CLAMP_LIMIT',
    'clamp_negatives',
    'compensated_sum',
    'get_path',
    'nearest_integer',
    'tqdm',
)


#
# Largest total negative mass that round-off is allowed to produce.
#
# Anything above this points at a genuine bug rather than float dust.
#

CLAMP_LIMIT = 1e-9


def compensated_sum(values: Union[np.ndarray, Iterable[float]]) -> float:
    """
    Sums floats without accumulating rounding errors.

    Args:
        values: The numbers to add.

    Returns:
        The correctly rounded sum.
    """
    if isinstance(values, np.ndarray):
        values = values.ravel().tolist()

    return math.fsum(values)


def clamp_negatives(
        weights: np.ndarray,
        limit: float = CLAMP_LIMIT,
        ) -> np.ndarray:
    """
    Replaces small negative entries by zero.

    Args:
        weights: Entries which should be nonnegative.
        limit: Largest tolerated negative mass.

    Returns:
        A new array without negative entries.

    Raises:
        NumericalIntegrityError: If the negative mass exceeds the limit.
    """
    negative = weights[weights < 0]

    if negative.size == 0:
        return weights.copy()

    clamped = -compensated_sum(negative)

    if limit < clamped:
        raise NumericalIntegrityError(
            f"Clamped mass {clamped:.3e} exceeds {limit:.1e}."
        )

    return np.clip(weights, 0.0, None)


def nearest_integer(value: float, tolerance: float = 1e-9) -> Optional[int]:
    """
    Rounds a float that is supposed to be integral.

    Args:
        value: The float to round.
        tolerance: Largest accepted distance to the integer.

    Returns:
        The integer, or None if the value is not close to one.
    """
    rounded = round(value)

    if abs(value - rounded) <= tolerance * max(1.0, abs(value)):
        return int(rounded)

    return None


def get_path(source: Union[None, Path, str]) -> Optional[Path]:
    """
    Creates a path from an object, if one is supplied.

    Args:
        source: Object to create a path from.

    Returns:
        A resolved path instance, or None.
    """
    if source is None:
        return None

    return Path(source).resolve()


class tqdm(_tqdm):
    """
    Adds an ASCII progress bar to the iterable.
    """

    defaults = {
        'ascii': True,
        'leave': False,
        'smoothing': 0.0,
        'ncols': 72,
    }

    def __init__(self, *args, **kwargs):
        kwargs = {**self.defaults, **kwargs}
        return super().__init__(*args, **kwargs)
