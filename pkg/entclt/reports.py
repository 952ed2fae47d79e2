"""
Bound reports.
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
from typing import Any, Dict, List, Optional, Tuple

from entclt.flavors import ReportStatus


__all__ = (
    'DEFAULT_TOLERANCE',
    'BoundReport',
    'summarize',
)


DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """
    Outcome of checking one inequality.

    The inequality reads `lhs <= rhs`, and it passes when the slack
    `rhs - lhs` is at least `-tolerance`.
    """
    name: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    n: Optional[int] = None
    tolerance: float = DEFAULT_TOLERANCE
    skipped: bool = False

    columns = ('name', 'n', 'lhs', 'rhs', 'slack', 'pass', 'skipped')

    @classmethod
    def create(
            cls,
            name: str,
            lhs: float,
            rhs: float,
            n: Optional[int] = None,
            tolerance: float = DEFAULT_TOLERANCE,
            ) -> 'BoundReport':
        """
        Reports on the inequality `lhs <= rhs`.

        Args:
            name: Name of the check.
            lhs: Left hand side.
            rhs: Right hand side.
            n: Number of summands, if any.
            tolerance: Accepted violation.
        """
        slack = rhs - lhs
        passed = math.isfinite(slack) and -tolerance <= slack

        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            slack=slack,
            passed=passed,
            n=n,
            tolerance=tolerance,
        )

    @classmethod
    def identity(
            cls,
            name: str,
            lhs: float,
            rhs: float,
            n: Optional[int] = None,
            tolerance: float = DEFAULT_TOLERANCE,
            ) -> 'BoundReport':
        """
        Reports on the equation `lhs == rhs`.

        The slack is the tolerance minus the residual, so it is
        negative exactly when the residual exceeds the tolerance.
        """
        slack = tolerance - abs(lhs - rhs)
        passed = math.isfinite(slack) and 0.0 <= slack

        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            slack=slack,
            passed=passed,
            n=n,
            tolerance=tolerance,
        )

    @classmethod
    def skip(cls, name: str, n: Optional[int] = None) -> 'BoundReport':
        """
        Reports a check that does not apply.
        """
        nan = math.nan

        return cls(
            name=name,
            lhs=nan,
            rhs=nan,
            slack=nan,
            passed=True,
            n=n,
            skipped=True,
        )

    @property
    def status(self) -> ReportStatus:
        if self.skipped:
            return ReportStatus.SKIPPED
        elif self.passed:
            return ReportStatus.PASSED
        else:
            return ReportStatus.FAILED

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_mapping(self) -> Dict[str, Any]:
        """
        Returns a JSON-ready mapping, with None for missing numbers.
        """
        def number(value: float) -> Optional[float]:
            return value if math.isfinite(value) else None

        return {
            'name': self.name,
            'n': self.n,
            'lhs': number(self.lhs),
            'rhs': number(self.rhs),
            'slack': number(self.slack),
            'pass': self.passed,
            'skipped': self.skipped,
        }

    def to_row(self) -> Tuple[Any, ...]:
        """
        Returns the values of one CSV row, in `columns` order.
        """
        data = self.to_mapping()
        return tuple(data[key] for key in self.columns)


def summarize(reports: List[BoundReport]) -> Dict[str, Any]:
    """
    Counts outcomes and collects the failures.
    """
    failures = [r for r in reports if r.status is ReportStatus.FAILED]

    return {
        'total': len(reports),
        'passed': sum(r.status is ReportStatus.PASSED for r in reports),
        'failed': len(failures),
        'skipped': sum(r.status is ReportStatus.SKIPPED for r in reports),
        'failures': failures,
    }
