"""
Flavors for Entclt.
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


from enum import Enum


__all__ = (
    'Flavor',
    'SmoothingKind',
    'OutputFormat',
    'ReportStatus',
)


class Flavor(Enum):
    """
    Base class for flavors.
    """

    def __new__(cls, *args):
        """
        Numbers members in declaration order.
        """
        obj = object.__new__(cls)
        obj._value_ = len(cls.__members__) + 1
        return obj

    def __repr__(self):
        return f"<flavor '{type(self).__name__}.{self.name}'>"

    @classmethod
    def parse(cls, text: str) -> 'Flavor':
        """
        Looks up a member by case-insensitive name.

        Args:
            text: Name of the member.

        Raises:
            ValueError: If no member has the name.
        """
        key = text.strip().upper().replace('-', '_')

        try:
            return cls[key]
        except KeyError:
            names = ', '.join(m.name.lower() for m in cls)
            raise ValueError(f"Expected one of {names}, got '{text}'.")

    @property
    def label(self) -> str:
        """
        Lower case name, as used on the command line and in reports.
        """
        return self.name.lower()


class SmoothingKind(Flavor):
    """
    Indicates what is added to a lattice law before Gaussian smoothing.
    """
    LATTICE_SMOOTHED = ()
    LATTICE_UNIFORM_SMOOTHED = ()


class OutputFormat(Flavor):
    """
    Indicates the file format of emitted tables.
    """
    CSV = ()
    JSON = ()


class ReportStatus(Flavor):
    """
    Indicates the outcome of a bound check.
    """
    PASSED = ()
    FAILED = ()
    SKIPPED = ()
