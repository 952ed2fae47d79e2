"""
Verify task tests.
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

from entclt.config import CHECK_NAMES, RunConfig
from entclt.flavors import ReportStatus
from entclt.reports import BoundReport
from entclt.tasks import VerifyTask


BINOMIAL_CHECKS = (
    'binomial_entropy',
    'binomial_upper',
    'binomial_relative_entropy',
    'feller',
)


def by_name(reports, n):
    return {r.name: r for r in reports if r.n == n}


class TestVerifyTask:
    """
    VerifyTask tests.
    """

    def test_fair_coin(self, fair_coin):
        """
        Tests every check passes for coin sums.
        """
        config = RunConfig(n_grid=(1, 2, 4, 8, 64))
        reports = VerifyTask(fair_coin, config, progress=False).run()

        assert len(reports) == 5 * len(CHECK_NAMES)
        assert all(report.passed for report in reports)

    def test_fair_coin_skips(self, fair_coin):
        """
        Tests binomial checks needing n >= 2 are skipped at n = 1.
        """
        config = RunConfig(n_grid=(1, 3))
        reports = VerifyTask(fair_coin, config, progress=False).run()

        first = by_name(reports, 1)
        third = by_name(reports, 3)

        assert first['binomial_entropy'].skipped
        assert first['feller'].skipped
        assert not first['binomial_upper'].skipped
        assert third['feller'].skipped
        assert not third['binomial_entropy'].skipped

    def test_other_laws_skip(self, three_point):
        """
        Tests binomial checks are skipped for other laws.
        """
        config = RunConfig(n_grid=(2, 32))
        reports = VerifyTask(three_point, config, progress=False).run()

        for report in reports:
            if report.name in BINOMIAL_CHECKS:
                assert report.status is ReportStatus.SKIPPED
                assert math.isnan(report.lhs)
            else:
                assert report.status is ReportStatus.PASSED

    def test_selected_checks(self, uniform_three):
        """
        Tests only selected checks run, in canonical order.
        """
        config = RunConfig(n_grid=(1, 2))
        task = VerifyTask(
            uniform_three, config, progress=False,
            checks=['pinsker', 'solidarity'],
        )

        names = [report.name for report in task.run()]
        assert names == ['solidarity', 'pinsker'] * 2

    def test_unknown_check(self, fair_coin):
        """
        Tests `ValueError` is raised for unknown check names.
        """
        with pytest.raises(ValueError):
            VerifyTask(fair_coin, checks=['nope'])

    def test_tolerances(self, biased_coin):
        """
        Tests reports carry the configured tolerances.
        """
        config = RunConfig(n_grid=(2,), tolerances={'pinsker': 1e-6})
        task = VerifyTask(biased_coin, config, progress=False)
        reports = by_name(task.run(), 2)

        assert reports['pinsker'].tolerance == 1e-6
        assert reports['solidarity'].tolerance == 1e-9

    def test_violation(self, fair_coin, monkeypatch):
        """
        Tests failing checks are reported as failed.
        """
        config = RunConfig(n_grid=(4,))
        task = VerifyTask(
            fair_coin, config, progress=False, checks=['max_entropy'],
        )

        def violated(*args, **kwargs):
            return BoundReport.create('max_entropy', 2.0, 1.0, n=4)

        monkeypatch.setattr('entclt.tasks.verify.max_entropy_check', violated)

        reports = task.run()

        assert reports[0].status is ReportStatus.FAILED
