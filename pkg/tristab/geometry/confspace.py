# Copyright (C) 2025 Juraj Marcin <juraj@jurajmarcin.com>
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
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

from collections import Counter
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from logging import getLogger

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from tristab.errors import InvalidSpec
from tristab.types.graded import GradedTate

_logger = getLogger(__name__)

_QRING, _q = ring("q", ZZ)


@dataclass(frozen=True)
class CellStratification:
    """A space stratified by affine cells, given by their complex dimensions."""

    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cells:
            raise InvalidSpec("A cell stratification needs at least one cell")
        if any(cell < 0 for cell in self.cells):
            raise InvalidSpec(f"Cell dimensions must be nonnegative, got {self.cells}")
        object.__setattr__(self, "cells", tuple(sorted(self.cells, reverse=True)))

    @staticmethod
    def projective_space(dimension: int) -> "CellStratification":
        return CellStratification(tuple(range(dimension, -1, -1)))

    @staticmethod
    def hirzebruch() -> "CellStratification":
        # A^2 u A^1 for the complement of a point in P^2, A^1 u A^0 for the section
        return CellStratification((2, 1, 1, 0))


def twisted_bm_config(cells: CellStratification, k: int) -> GradedTate:
    """Borel-Moore homology of B(Z, k) with sign-twisted coefficients.

    Only distributions placing at most one point in each cell contribute;
    a k-subset S of cells gives Q(sum S) in degree 2 * sum S.
    """
    if k < 0:
        raise InvalidSpec(f"Number of points must be nonnegative, got k={k}")
    counts: Counter[tuple[int, int]] = Counter()
    for subset in combinations(cells.cells, k):
        total = sum(subset)
        counts[(2 * total, total)] += 1
    result = GradedTate.from_counts(counts)
    _logger.debug("B(%r, %d) with sign coefficients: %s", cells.cells, k, result.describe())
    return result


@cache
def gaussian_binomial(m: int, k: int) -> PolyElement:
    """[m choose k]_q by the q-Pascal recurrence."""
    if k < 0 or k > m:
        return _QRING.zero
    if k in (0, m):
        return _QRING.one
    return _q**k * gaussian_binomial(m - 1, k) + gaussian_binomial(m - 1, k - 1)


def grassmannian_bm(k: int, m: int) -> GradedTate:
    """Borel-Moore homology of B(P^{m-1}, k) read off the Grassmannian G(k, C^m)."""
    if k < 0 or m < 1:
        raise InvalidSpec(f"Grassmannian needs k >= 0 and m >= 1, got k={k}, m={m}")
    shift = k * (k - 1)
    counts = {
        (shift + 2 * j, shift // 2 + j): int(coefficient)
        for (j,), coefficient in gaussian_binomial(m, k).terms()
    }
    return GradedTate.from_counts(counts)
