"""
Run configuration.
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
import math
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from jmespath import compile as jmes

from entclt.flavors import OutputFormat


__all__ = (
    'CONFIG_KEY',
    'CHECK_NAMES',
    'RunConfig',
    'parse_n_grid',
    'parse_tolerance',
)


CONFIG_KEY = 'ENTCLT_CONFIG'

CHECK_NAMES = (
    'solidarity',
    'uniform_smoothing',
    'max_entropy',
    'entropy_upper_bound',
    'entropy_increase',
    'pinsker',
    'binomial_entropy',
    'binomial_upper',
    'binomial_relative_entropy',
    'feller',
)

#
# Tolerance keys. Checks without their own key fall back to `bound`.
#

DEFAULT_TOLERANCES = {
    'bound': 1e-9,
    'feller': 1e-12,
    'de_bruijn': 1e-3,
}

TOLERANCE_NAMES = frozenset(DEFAULT_TOLERANCES) | frozenset(CHECK_NAMES)

DEFAULT_N_GRID = (1, 2, 4, 8, 16, 32, 64, 128, 256, 512)


def parse_n_grid(text: str) -> Tuple[int, ...]:
    """
    Parses a comma separated list of sample sizes.

    Raises:
        ValueError: If an item is not an integer.
    """
    items = [item.strip() for item in text.split(',')]
    return tuple(int(item) for item in items if item)


def parse_tolerance(text: str) -> Tuple[str, float]:
    """
    Parses a `name=value` tolerance override.

    Raises:
        ValueError: If the text is malformed or the name unknown.
    """
    name, sep, value = text.partition('=')
    name = name.strip()

    if not sep or not name:
        raise ValueError(f"Expected name=value, got '{text}'.")

    if name not in TOLERANCE_NAMES:
        raise ValueError(f"Unknown tolerance name: {name}")

    return name, float(value)


def as_integer(value: Any) -> int:
    """
    Converts a config value to an integer.

    Raises:
        TypeError: If the value is not a number or a string.
        ValueError: If the value is not integral.
    """
    if isinstance(value, bool):
        raise TypeError("Booleans are not integers.")

    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"Expected an integer, got {value}.")

    return int(value)


def as_float(value: Any) -> float:
    """
    Converts a config value to a float.

    Raises:
        TypeError: If the value is not a number or a string.
        ValueError: If the string is not a number.
    """
    if isinstance(value, bool):
        raise TypeError("Booleans are not numbers.")

    return float(value)


def as_n_grid(value: Any) -> Tuple[int, ...]:
    """
    Converts a config value to a tuple of sample sizes.

    Raises:
        TypeError: If the value is not a list or a string.
        ValueError: If an item is not an integer.
    """
    if isinstance(value, str):
        return parse_n_grid(value)

    if not isinstance(value, list):
        raise TypeError("Expected a list of sample sizes.")

    return tuple(as_integer(item) for item in value)


@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by all commands.
    """
    n_grid: Tuple[int, ...] = DEFAULT_N_GRID
    tolerances: Mapping[str, float] = field(
        default_factory=lambda: dict(DEFAULT_TOLERANCES),
    )
    t_nodes: int = 64
    spatial_tol: float = 1e-9
    output: OutputFormat = OutputFormat.CSV
    cap: int = 2_000_000
    de_bruijn_cap: int = 64
    fft_threshold: int = 256

    paths = {
        'n_grid': jmes('scan.n_grid || n_grid'),
        'tolerances': jmes('tolerances'),
        't_nodes': jmes('quadrature.t_nodes || t_nodes'),
        'spatial_tol': jmes('quadrature.spatial_tol || spatial_tol'),
        'output': jmes('output.format || format || output'),
        'cap': jmes('limits.cap || cap'),
        'de_bruijn_cap': jmes('limits.de_bruijn_cap || de_bruijn_cap'),
        'fft_threshold': jmes('convolution.fft_threshold || fft_threshold'),
    }

    casts = {
        'n_grid': as_n_grid,
        't_nodes': as_integer,
        'spatial_tol': as_float,
        'cap': as_integer,
        'de_bruijn_cap': as_integer,
        'fft_threshold': as_integer,
    }

    def __post_init__(self) -> None:
        grid = tuple(int(n) for n in self.n_grid)
        object.__setattr__(self, 'n_grid', grid)

        if not grid:
            raise ValueError("The n grid must not be empty.")

        if grid[0] < 1:
            raise ValueError("The n grid must start at 1 or above.")

        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("The n grid must be strictly increasing.")

        tolerances = {**DEFAULT_TOLERANCES, **self.tolerances}
        object.__setattr__(self, 'tolerances', tolerances)

        for name, value in tolerances.items():
            if name not in TOLERANCE_NAMES:
                raise ValueError(f"Unknown tolerance name: {name}")

            if not (math.isfinite(value) and 0.0 < value):
                raise ValueError(f"Tolerance {name} must be positive.")

        for name in ('t_nodes', 'cap', 'de_bruijn_cap', 'fft_threshold'):
            if getattr(self, name) < 1:
                raise ValueError(f"Setting {name} must be at least 1.")

        if not self.spatial_tol > 0.0:
            raise ValueError("Setting spatial_tol must be positive.")

    def tolerance(self, name: str) -> float:
        """
        Returns the tolerance of a check.
        """
        return self.tolerances.get(name, self.tolerances['bound'])

    def override(self, **changes: Any) -> 'RunConfig':
        """
        Returns a copy with every change that is not None applied.
        """
        tolerances = changes.pop('tolerances', None) or {}
        changes = {k: v for k, v in changes.items() if v is not None}

        if tolerances:
            changes['tolerances'] = {**self.tolerances, **tolerances}

        return replace(self, **changes)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> 'RunConfig':
        """
        Creates a config from parsed JSON, nested or flat.

        Raises:
            ValueError: If a setting is invalid.
        """
        values: Dict[str, Any] = {}

        for key, path in cls.paths.items():
            value = path.search(data)

            if value is not None:
                values[key] = value

        for key, cast in cls.casts.items():
            if key not in values:
                continue

            try:
                values[key] = cast(values[key])
            except (TypeError, ValueError) as e:
                raise ValueError(f"Invalid setting {key}: {e}") from e

        if 'output' in values:
            values['output'] = OutputFormat.parse(str(values['output']))

        if 'tolerances' in values:
            tolerances = values['tolerances']

            if not isinstance(tolerances, dict):
                raise ValueError("Tolerances must be an object.")

            try:
                values['tolerances'] = {
                    str(k): as_float(v) for k, v in tolerances.items()
                }
            except (TypeError, ValueError) as e:
                raise ValueError(f"Invalid tolerance: {e}") from e

        return cls(**values)

    @classmethod
    def from_file(cls, path: Union[Path, str]) -> 'RunConfig':
        """
        Reads a config from a JSON file.

        Raises:
            OSError: If the file cannot be read.
            ValueError: If the file is malformed.
        """
        with open(path, 'rt', encoding='utf-8') as fobj:
            data = json.load(fobj)

        if not isinstance(data, dict):
            raise ValueError("Config file must contain an object.")

        return cls.from_mapping(data)

    @classmethod
    def load(
            cls,
            path: Union[None, Path, str] = None,
            environ: Optional[Mapping[str, str]] = None,
            ) -> 'RunConfig':
        """
        Reads the config file named by the argument or environment.

        Args:
            path: Config file path, or None for the environment.
            environ: Environment mapping, or None for `os.environ`.

        Returns:
            Defaults if neither names a file.
        """
        if environ is None:
            environ = os.environ

        if path is None:
            path = environ.get(CONFIG_KEY) or None

        if path is None:
            return cls()

        return cls.from_file(path)
