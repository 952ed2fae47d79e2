r"""
 _____       _       _ _   
| ____|_ __ | |_ ___| | |_ 
|  _| | '_ \| __/ __| | __|
| |___| | | | || (__| | |_ 
|_____|_| |_|\__\___|_|\__|
                           
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


__author__ = 'Entclt developers'
__copyright__ = 'Copyright (C) 2026  Entclt developers'
__license__ = 'GPLv3'
__version__ = '0.1.0'
