"""
Entropy functional tests.
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

import numpy as np
import pytest
from hypothesis import given
from scipy.special import ndtr

from entclt.binomials import binomial_pmf
from entclt.entropies import (
    QuantisedGaussianSpec, entropy, entropy_gap, entropy_increase_check,
    entropy_upper_bound_check, log_cell_masses, max_entropy_check,
    pinsker_check, quantized_gaussian, relative_entropy_to_gaussian,
    smoothed_relative_entropy, smoothing_check, solidarity_check,
    total_variation_to_gaussian,
)
from entclt.exceptions import DegenerateDistributionError, DistributionError
from entclt.lattices import make_pmf, moments, self_convolve

from .fixtures.strategies import maximal_pmfs


HALF_LOG_PI_E_HALF = 0.5 * math.log(math.pi * math.e / 2)


class TestEntropy:
    """
    entropy tests.
    """

    def test_fair_coin(self, fair_coin):
        """
        Tests Bern(1/2) has entropy log 2.
        """
        assert entropy(fair_coin) == pytest.approx(math.log(2), abs=1e-15)

    def test_point_mass(self, point_mass):
        """
        Tests point masses have zero entropy.
        """
        assert entropy(point_mass) == 0.0

    def test_two_coins(self, fair_coin):
        """
        Tests Bin(2, 1/2) has entropy 1.5 log 2.
        """
        p = self_convolve(fair_coin, 2)
        assert entropy(p) == pytest.approx(1.5 * math.log(2), abs=1e-15)

    def test_interior_zeros(self, three_point):
        """
        Tests empty lattice points contribute nothing.
        """
        expected = -sum(w * math.log(w) for w in (0.5, 0.3, 0.2))
        assert entropy(three_point) == pytest.approx(expected, abs=1e-15)


class TestLogCellMasses:
    """
    log_cell_masses tests.
    """

    def test_central_cell(self):
        """
        Tests a cell next to the mean.
        """
        value = log_cell_masses(np.array([0.0]), np.array([1.0]))[0]
        assert value == pytest.approx(math.log(ndtr(1.0) - 0.5), abs=1e-14)

    def test_far_tails(self):
        """
        Tests cells beyond forty deviations stay finite.
        """
        upper = log_cell_masses(np.array([40.0]), np.array([41.0]))[0]
        lower = log_cell_masses(np.array([-41.0]), np.array([-40.0]))[0]

        assert math.isfinite(upper)
        assert upper < -800.0
        assert upper == pytest.approx(lower, rel=1e-14)

    def test_unbounded_cell(self):
        """
        Tests a cell reaching minus infinity.
        """
        value = log_cell_masses(np.array([-math.inf]), np.array([0.0]))[0]
        assert value == pytest.approx(math.log(0.5), abs=1e-15)


class TestQuantizedGaussian:
    """
    quantized_gaussian tests.
    """

    def test_standard_cell(self):
        """
        Tests the cell [0, 1) of the standard normal.
        """
        q = quantized_gaussian(QuantisedGaussianSpec(0.0, 1.0, 0.0, 1.0))
        cell = q.weights[0 - q.first_index]

        assert cell == pytest.approx(0.341344746068543, abs=1e-14)
        assert q.captured >= 1.0 - 1e-14
        assert q.deficit <= 1e-14

    def test_symmetry(self):
        """
        Tests cells mirror around a mean at a cell centre.
        """
        spec = QuantisedGaussianSpec(0.5, 2.0, 0.0, 1.0)
        q = quantized_gaussian(spec, index_range=(-20, 20))
        weights = q.weights

        assert q.first_index + q.last_index == 0
        assert np.allclose(weights, weights[::-1], rtol=1e-13)

    def test_wide_cell(self):
        """
        Tests a single huge cell captures everything.
        """
        spec = QuantisedGaussianSpec(0.0, 1.0, -50.0, 100.0)
        q = quantized_gaussian(spec)

        assert len(q) == 1
        assert q.weights[0] == pytest.approx(1.0, abs=1e-15)

    def test_small_range(self):
        """
        Tests `DistributionError` is raised for a short index range.
        """
        spec = QuantisedGaussianSpec(0.0, 1.0, 0.0, 1.0)

        with pytest.raises(DistributionError):
            quantized_gaussian(spec, index_range=(0, 0))

    def test_zero_variance(self):
        """
        Tests `DegenerateDistributionError` is raised for no variance.
        """
        with pytest.raises(DegenerateDistributionError):
            QuantisedGaussianSpec(0.0, 0.0, 0.0, 1.0)


class TestRelativeEntropy:
    """
    relative_entropy_to_gaussian tests.
    """

    def test_point_mass(self, point_mass):
        """
        Tests `DegenerateDistributionError` is raised for point masses.
        """
        with pytest.raises(DegenerateDistributionError):
            relative_entropy_to_gaussian(point_mass)

    @given(maximal_pmfs(max_size=30))
    def test_translation(self, p):
        """
        Tests shifting a law does not change D.
        """
        shifted = p.shifted(3.7)
        expected = relative_entropy_to_gaussian(p)

        assert relative_entropy_to_gaussian(shifted) == expected
        assert 0.0 <= expected

    @given(maximal_pmfs(max_size=30))
    def test_scaling(self, p):
        """
        Tests rescaling offset and span together does not change D.
        """
        scaled = make_pmf(2.5 * p.offset, 2.5 * p.span, p.weights)
        expected = relative_entropy_to_gaussian(p)
        actual = relative_entropy_to_gaussian(scaled)

        assert actual == pytest.approx(expected, abs=1e-10)

    def test_fine_quantised_gaussian(self):
        """
        Tests a finely quantised Gaussian is close to its reference.
        """
        spec = QuantisedGaussianSpec(0.0, 1.0, 0.0, 0.05)
        q = quantized_gaussian(spec)
        p = make_pmf(q.offset, q.span, q.weights, q.first_index)

        assert relative_entropy_to_gaussian(p) < 1e-3

    def test_binomial(self):
        """
        Tests D of Bin(64, 1/2) is below 8 / sqrt(64).
        """
        assert relative_entropy_to_gaussian(binomial_pmf(64)) <= 1.0


class TestEntropyGap:
    """
    entropy_gap tests.
    """

    @pytest.mark.parametrize('n', (1, 2, 10, 100))
    def test_binomial(self, fair_coin, n):
        """
        Tests the deficit of a coin sum against its closed form.
        """
        p_Sn = self_convolve(fair_coin, n)
        expected = HALF_LOG_PI_E_HALF + 0.5 * math.log(n) - entropy(p_Sn)

        assert entropy_gap(p_Sn, n, 1.0, 0.25) == pytest.approx(expected)

    def test_decreasing(self, fair_coin):
        """
        Tests the deficit shrinks along a coin sum.
        """
        gaps = [
            entropy_gap(self_convolve(fair_coin, n), n, 1.0, 0.25)
            for n in (1, 4, 16, 64, 256)
        ]

        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 0.01

    def test_invalid_arguments(self, fair_coin):
        """
        Tests invalid sizes and variances are rejected.
        """
        with pytest.raises(ValueError):
            entropy_gap(fair_coin, 0, 1.0, 0.25)

        with pytest.raises(DegenerateDistributionError):
            entropy_gap(fair_coin, 1, 1.0, 0.0)


class TestChecks:
    """
    Bound check tests.
    """

    def sum_args(self, p, n):
        stats = moments(p)
        return self_convolve(p, n), n, p.span, stats.variance

    def test_solidarity_bound_value(self, fair_coin):
        """
        Tests the bound r (1 + r / 2) for Bern(1/2).
        """
        report = solidarity_check(*self.sum_args(fair_coin, 4))

        assert report.rhs == pytest.approx(1.5)
        assert report.passed

    def test_solidarity_at_one(self, fair_coin):
        """
        Tests a single coin against a bound of 2 (1 + 1).
        """
        report = solidarity_check(*self.sum_args(fair_coin, 1))

        assert report.rhs == pytest.approx(4.0)
        assert report.passed

    def test_solidarity_three_point(self, three_point):
        """
        Tests the three point law at n = 16.
        """
        assert solidarity_check(*self.sum_args(three_point, 16)).passed

    def test_max_entropy_uniform(self, fair_coin):
        """
        Tests both sides for a single fair coin.
        """
        report = max_entropy_check(*self.sum_args(fair_coin, 1))
        rhs = 0.5 * math.log(2 * math.pi * math.e / 3)

        assert report.lhs == pytest.approx(math.log(2))
        assert report.rhs == pytest.approx(rhs)
        assert report.rhs == pytest.approx(0.8697, abs=1e-4)
        assert report.passed

    def test_max_entropy_asymmetric(self, biased_coin):
        """
        Tests an asymmetric two point law.
        """
        assert max_entropy_check(*self.sum_args(biased_coin, 1)).passed

    def test_max_entropy_binomial(self, fair_coin):
        """
        Tests coin sums up to 128.
        """
        for n in range(1, 129):
            report = max_entropy_check(*self.sum_args(fair_coin, n))
            assert 0.0 < report.slack

    def test_smoothed_value(self, fair_coin):
        """
        Tests D(X + U) for a fair coin.
        """
        args = self.sum_args(fair_coin, 1)
        expected = 0.5 * math.log(2 * math.pi * math.e / 3) - math.log(2)

        assert smoothed_relative_entropy(*args) == pytest.approx(expected)
        assert smoothed_relative_entropy(*args) == pytest.approx(
            0.1765, abs=1e-4,
        )

    @pytest.mark.parametrize('n', (1, 3, 17, 50))
    def test_smoothed_matches_slack(self, three_point, n):
        """
        Tests the smoothed D equals the max entropy slack.
        """
        args = self.sum_args(three_point, n)
        slack = max_entropy_check(*args).slack

        assert smoothed_relative_entropy(*args) == pytest.approx(
            slack, abs=1e-12,
        )

    @pytest.mark.parametrize('n', (4, 16, 64, 256))
    def test_smoothing(self, fair_coin, n):
        """
        Tests uniform smoothing moves D within its bound.
        """
        assert smoothing_check(*self.sum_args(fair_coin, n)).passed

    @pytest.mark.parametrize('n', (1, 4, 16, 64))
    def test_entropy_upper_bound(self, uniform_three, n):
        """
        Tests the bound implied by solidarity.
        """
        args = self.sum_args(uniform_three, n)
        assert entropy_upper_bound_check(*args).passed

    def test_entropy_increase(self, three_point):
        """
        Tests a sum has more entropy than one summand.
        """
        p_Sn = self_convolve(three_point, 2)
        report = entropy_increase_check(three_point, p_Sn, 2)

        assert report.passed
        assert report.n == 2

    @pytest.mark.parametrize('n', (1, 2, 8, 256))
    def test_pinsker(self, fair_coin, n):
        """
        Tests 2 TV^2 <= D for coin sums.
        """
        report = pinsker_check(self_convolve(fair_coin, n), n)

        assert report.passed
        assert report.name == 'pinsker'

    def test_pinsker_near_gaussian(self):
        """
        Tests both sides are small for a finely quantised Gaussian.
        """
        spec = QuantisedGaussianSpec(1.0, 4.0, 0.0, 0.1)
        q = quantized_gaussian(spec)
        p = make_pmf(q.offset, q.span, q.weights, q.first_index)
        report = pinsker_check(p)

        assert report.passed
        assert report.rhs < 1e-3

    @given(maximal_pmfs(max_size=20))
    def test_total_variation_range(self, p):
        """
        Tests TV to the reference is a proper distance.
        """
        assert 0.0 <= total_variation_to_gaussian(p) <= 1.0
