"""
Exceptions for Entclt.
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


__all__ = (
    'EntcltError',
    'DistributionError',
    'DegenerateDistributionError',
    'LatticeError',
    'NumericalIntegrityError',
    'QuadratureError',
    'SupportCapError',
)


class EntcltError(Exception):
    """
    Base class for Entclt exceptions.
    """


class DistributionError(EntcltError):
    """
    Distribution input is invalid.
    """


class DegenerateDistributionError(DistributionError):
    """
    Distribution has a single support point.
    """


class LatticeError(EntcltError):
    """
    Lattices are incompatible or the span is unsuitable.
    """


class NumericalIntegrityError(EntcltError):
    """
    Round-off exceeded what can be silently repaired.
    """


class QuadratureError(EntcltError):
    """
    Numerical integration failed to converge.
    """


class SupportCapError(EntcltError):
    """
    Computation would exceed a configured size limit.
    """
