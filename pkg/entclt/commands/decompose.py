"""
Decompose command.
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
import sys
from argparse import ArgumentParser, Namespace
from typing import Any, Dict

from entclt.decompositions import (
    conditional_variance_trend, decompose, reconstruct,
)
from entclt.lattices import total_variation

from .base import EXIT_SUCCESS, DistributionCommand, note


__all__ = (
    'DecomposeCommand',
)


class DecomposeCommand(DistributionCommand):
    """
    Shows the Bernoulli part decomposition of a base law.
    """

    def extend(self, parser: ArgumentParser) -> None:
        self.add_n_grid(parser)

    def run(self, opts: Namespace) -> int:
        config = self.configure(opts)
        pmf = self.load(opts)

        part = decompose(pmf)
        residual = total_variation(reconstruct(part), pmf)

        data: Dict[str, Any] = part.to_mapping()
        data['residual'] = residual

        if opts.n_grid:
            rows = conditional_variance_trend(
                pmf, config.n_grid, config.fft_threshold,
            )
            data['trend'] = [row._asdict() for row in rows]

        note(f"Bernoulli parameter: {part.q:.12g}")
        note(f"Residual: {residual:.3e}")

        if opts.out is None:
            self.dump(data, sys.stdout)
        else:
            with open(opts.out, 'wt', encoding='utf-8') as fobj:
                self.dump(data, fobj)

        return EXIT_SUCCESS

    def dump(self, data: Dict[str, Any], fobj) -> None:
        json.dump(data, fobj, indent=2, allow_nan=False)
        fobj.write('\n')
