"""
Distribution loaders.
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


import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Callable, Dict, List

from entclt.binomials import binomial_pmf
from entclt.exceptions import DistributionError
from entclt.lattices import LatticePmf, make_pmf


__all__ = (
    'DistributionLoader',
    'FileLoader',
    'NamedLoader',
    'load_distribution',
)


class DistributionLoader(ABC):
    """
    Abstract base class for distribution sources.
    """

    @abstractmethod
    def load(self, source: str) -> LatticePmf:
        """
        Creates a pmf from a source description.

        Args:
            source: File path or law name.

        Raises:
            DistributionError: If the source is invalid.
        """

    def __call__(self, source: str) -> LatticePmf:
        return self.load(source)


class FileLoader(DistributionLoader):
    """
    Reads JSON distribution specs from files.
    """

    def load(self, source: str) -> LatticePmf:
        """
        Raises:
            OSError: If the file cannot be read.
            DistributionError: If the file is not a valid spec.
        """
        with open(source, 'rt', encoding='utf-8') as fobj:
            try:
                data = json.load(fobj)
            except ValueError as e:
                raise DistributionError(f"Malformed JSON: {e}") from e

        return LatticePmf.from_mapping(data)


def bernoulli(p: float) -> LatticePmf:
    if not 0.0 <= p <= 1.0:
        raise DistributionError(f"Expected 0 <= p <= 1, got {p}.")

    return make_pmf(0.0, 1.0, [1.0 - p, p])


def uniform(k: int) -> LatticePmf:
    if k < 1:
        raise DistributionError(f"Expected k >= 1, got {k}.")

    return make_pmf(0.0, 1.0, [1.0] * k)


def binomial(n: int, p: float = 0.5) -> LatticePmf:
    try:
        return binomial_pmf(n, p)
    except ValueError as e:
        raise DistributionError(str(e)) from e


class NamedLoader(DistributionLoader):
    """
    Builds laws from names such as `bern:0.3`, `uniform:3` or `bin:8`.

    `uniform:k` is uniform on {0, ..., k - 1}, and `bin:n` is Bin(n, 1/2)
    unless a third field gives the success probability.
    """
    laws: Dict[str, Callable[..., LatticePmf]] = {
        'bern': bernoulli,
        'uniform': uniform,
        'bin': binomial,
    }

    casts: Dict[str, List[Callable[[str], object]]] = {
        'bern': [float],
        'uniform': [int],
        'bin': [int, float],
    }

    def matches(self, source: str) -> bool:
        """
        Returns true if the source looks like a law name.
        """
        prefix = source.split(':', 1)[0]
        return ':' in source and prefix in self.laws

    def load(self, source: str) -> LatticePmf:
        name, *fields = source.split(':')

        if name not in self.laws:
            raise DistributionError(f"Unknown law: {name}")

        casts = self.casts[name]

        if not 1 <= len(fields) <= len(casts):
            raise DistributionError(f"Wrong number of fields: {source}")

        try:
            args = [cast(value) for cast, value in zip(casts, fields)]
        except ValueError as e:
            raise DistributionError(f"Malformed law: {source}") from e

        return self.laws[name](*args)


def load_distribution(source: str) -> LatticePmf:
    """
    Loads a pmf from an existing file or else from a law name.

    Raises:
        DistributionError: If the source is invalid.
        OSError: If a file cannot be read.
    """
    named = NamedLoader()

    if named.matches(source) and not Path(source).exists():
        return named(source)

    return FileLoader()(source)
