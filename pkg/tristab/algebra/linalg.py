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

from collections.abc import Sequence
from dataclasses import dataclass, replace
from logging import getLogger

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

_logger = getLogger(__name__)

DEFAULT_PRIME = 2**31 - 1


@dataclass(frozen=True)
class ExactMatrix:
    """Integer matrix read over the rationals (`prime` None) or over F_prime."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    prime: int | None = None

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise ValueError(
                f"Matrix entries do not match the declared shape {self.rows}x{self.cols}"
            )

    @staticmethod
    def from_rows(
        rows: Sequence[Sequence[int]], cols: int, prime: int | None = None
    ) -> "ExactMatrix":
        return ExactMatrix(
            len(rows), cols, tuple(tuple(int(e) for e in row) for row in rows), prime
        )

    def over(self, prime: int | None) -> "ExactMatrix":
        return replace(self, prime=prime)

    def stacked(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.cols != self.cols:
            raise ValueError("Stacked matrices need the same number of columns")
        return replace(self, rows=self.rows + other.rows, entries=self.entries + other.entries)

    @property
    def field_name(self) -> str:
        return "QQ" if self.prime is None else f"GF({self.prime})"

    def domain_matrix(self) -> DomainMatrix:
        domain = QQ if self.prime is None else GF(self.prime)
        return DomainMatrix(
            [[domain(entry) for entry in row] for row in self.entries],
            (self.rows, self.cols),
            domain,
        )


def exact_rank(matrix: ExactMatrix) -> int:
    if not matrix.rows or not matrix.cols:
        return 0
    rank = matrix.domain_matrix().rank()
    _logger.debug(
        "Rank of %dx%d matrix over %s is %d",
        matrix.rows,
        matrix.cols,
        matrix.field_name,
        rank,
    )
    return rank


def certified_rank(matrix: ExactMatrix, expected: int) -> tuple[int, bool]:
    """Rank over the matrix field, recomputed over QQ if it falls short of `expected`.

    Returns the rank and whether the rational recomputation was needed.
    """
    rank = exact_rank(matrix)
    if rank >= expected or matrix.prime is None:
        return rank, False
    _logger.info(
        "Rank %d < %d over %s, escalating to rationals", rank, expected, matrix.field_name
    )
    return exact_rank(matrix.over(None)), True
