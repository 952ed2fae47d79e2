"""
Common fixtures.
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


import pytest

from entclt.flavors import Flavor
from entclt.lattices import make_pmf


@pytest.fixture
def flavor():
    """
    Returns a flavor with A and B members.
    """
    class MyFlavor(Flavor):
        A = ()
        B = ()

    return MyFlavor


@pytest.fixture
def fair_coin():
    """
    Returns Bern(1/2) on {0, 1}.
    """
    return make_pmf(0.0, 1.0, [1.0, 1.0])


@pytest.fixture
def biased_coin():
    """
    Returns Bern(1/3) on {0, 1}.
    """
    return make_pmf(0.0, 1.0, [2.0, 1.0])


@pytest.fixture
def uniform_three():
    """
    Returns the uniform law on {0, 1, 2}.
    """
    return make_pmf(0.0, 1.0, [1.0, 1.0, 1.0])


@pytest.fixture
def three_point():
    """
    Returns the law on {0, 1, 3} with weights 0.5, 0.3 and 0.2.
    """
    return make_pmf(0.0, 1.0, [0.5, 0.3, 0.0, 0.2])


@pytest.fixture
def point_mass():
    """
    Returns a point mass at 2.5.
    """
    return make_pmf(2.5, 1.0, [1.0])


@pytest.fixture
def base_laws(fair_coin, biased_coin, uniform_three, three_point):
    """
    Returns the base laws used by the convergence checks.
    """
    return {
        'fair_coin': fair_coin,
        'biased_coin': biased_coin,
        'uniform_three': uniform_three,
        'three_point': three_point,
    }
