"""
Command test configuration.
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

from entclt.config import CONFIG_KEY


@pytest.fixture(autouse=True)
def environ(monkeypatch):
    """
    Hides any config file named by the environment.
    """
    monkeypatch.delenv(CONFIG_KEY, raising=False)


@pytest.fixture
def law_file(tmp_path):
    """
    Returns the path of a distribution spec on a coarse lattice.
    """
    path = tmp_path / 'law.json'
    path.write_text('{"offset": 0, "span": 1, "weights": [0.5, 0, 0.5]}')

    return str(path)
