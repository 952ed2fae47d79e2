"""
Bound report tests.
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

import pytest

from entclt.flavors import ReportStatus
from entclt.reports import BoundReport, summarize


class TestBoundReport:
    """
    BoundReport tests.
    """

    def test_create(self):
        """
        Tests slack and outcome of a satisfied inequality.
        """
        report = BoundReport.create('solidarity', 0.5, 1.5, n=4)

        assert report.slack == 1.0
        assert report.passed
        assert report.status is ReportStatus.PASSED

    def test_create_within_tolerance(self):
        """
        Tests violations below the tolerance still pass.
        """
        report = BoundReport.create('pinsker', 1.0 + 1e-10, 1.0)

        assert report.slack < 0.0
        assert report.passed

    def test_create_violated(self):
        """
        Tests violations above the tolerance fail.
        """
        report = BoundReport.create('pinsker', 1.0, 0.5, tolerance=0.1)

        assert not report.passed
        assert report.status is ReportStatus.FAILED

    def test_create_not_finite(self):
        """
        Tests infinite sides never pass.
        """
        assert not BoundReport.create('feller', math.inf, 1.0).passed
        assert not BoundReport.create('feller', math.nan, 1.0).passed

    def test_identity(self):
        """
        Tests the slack of an equation is tolerance minus residual.
        """
        report = BoundReport.identity('de_bruijn', 1.0, 1.0005, 4, 1e-3)

        assert report.slack == pytest.approx(5e-4)
        assert report.residual == pytest.approx(5e-4)
        assert report.passed

    def test_identity_violated(self):
        """
        Tests residuals above the tolerance fail.
        """
        report = BoundReport.identity('de_bruijn', 1.0, 1.01, 4, 1e-3)
        assert not report.passed

    def test_skip(self):
        """
        Tests skipped reports pass without values.
        """
        report = BoundReport.skip('feller', n=3)

        assert report.passed
        assert report.status is ReportStatus.SKIPPED
        assert math.isnan(report.lhs)

    def test_to_mapping(self):
        """
        Tests missing numbers map to None.
        """
        mapping = BoundReport.skip('feller', n=3).to_mapping()

        assert mapping == {
            'name': 'feller',
            'n': 3,
            'lhs': None,
            'rhs': None,
            'slack': None,
            'pass': True,
            'skipped': True,
        }

    def test_to_row(self):
        """
        Tests rows follow the column order.
        """
        report = BoundReport.create('max_entropy', 1.0, 2.0, n=8)

        assert report.to_row() == (
            'max_entropy', 8, 1.0, 2.0, 1.0, True, False,
        )
        assert len(report.to_row()) == len(BoundReport.columns)


class TestSummarize:
    """
    summarize tests.
    """

    def test_counts(self):
        """
        Tests outcomes are counted and failures collected.
        """
        failure = BoundReport.create('pinsker', 2.0, 1.0, n=2)
        reports = [
            BoundReport.create('pinsker', 0.0, 1.0, n=1),
            failure,
            BoundReport.skip('feller', n=3),
        ]

        summary = summarize(reports)

        assert summary['total'] == 3
        assert summary['passed'] == 1
        assert summary['failed'] == 1
        assert summary['skipped'] == 1
        assert summary['failures'] == [failure]

    def test_empty(self):
        """
        Tests an empty list summarizes to zeros.
        """
        summary = summarize([])

        assert summary['total'] == 0
        assert summary['failures'] == []
