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

from dataclasses import dataclass, field
from enum import StrEnum

from tristab.types.graded import GradedTate
from tristab.types.surface import StratumInfo, SurfaceSpec


class Assumption(StrEnum):
    E1_DEGENERATION = "discriminant-e1-degenerates-in-stable-range"
    RANK_ONE_DIFFERENTIALS = "maroni-differentials-between-matching-classes-have-rank-1"
    LERAY_HIRSCH = "orbit-map-surjective-in-cohomology"
    KAPPA1_SQUARED_VANISHES = "kappa1-squared-vanishes-on-strata"


@dataclass(kw_only=True)
class VassilievPage:
    """E1 page of the spectral sequence for the Borel-Moore homology of the discriminant.

    Column p holds the Borel-Moore homology of the p-th filtration stratum,
    keyed by total degree p + q and Tate weight.
    """

    spec: SurfaceSpec
    v: int
    columns: dict[int, GradedTate]
    cutoff_n: int
    assumptions: list[Assumption] = field(
        default_factory=lambda: [Assumption.E1_DEGENERATION]
    )

    @property
    def valid_bm_degree_from(self) -> int:
        return 2 * self.v - self.cutoff_n

    def entry(self, p: int, total_degree: int) -> dict[int, int]:
        return self.columns.get(p, GradedTate()).in_degree(total_degree)


@dataclass(kw_only=True)
class EulerRanks:
    """Ranks of multiplication by the Euler class from base degree j to j + 2."""

    ranks: dict[int, int] = field(default_factory=dict)

    def get(self, degree: int) -> int | None:
        return self.ranks.get(degree)

    def with_rank(self, degree: int, rank: int) -> "EulerRanks":
        return EulerRanks(ranks={**self.ranks, degree: rank})

    def __str__(self) -> str:
        return ", ".join(
            f"{degree}->{degree + 2}: {rank}" for degree, rank in sorted(self.ranks.items())
        ) or "all forced"


@dataclass(kw_only=True)
class GysinSolution:
    base: GradedTate
    # per (degree, weight) of the source: number of classes hit by the Euler class
    ranks: dict[tuple[int, int], int]
    max_degree: int

    def rank(self, degree: int) -> int:
        return sum(r for (deg, _), r in self.ranks.items() if deg == degree)


@dataclass(kw_only=True)
class GysinScenario:
    label: str
    ranks: EulerRanks
    base: GradedTate | None
    accepted: bool
    arrows: list[tuple[int, int, int]] = field(default_factory=list)
    reason: str = ""


@dataclass(kw_only=True)
class StablePattern:
    """Cohomology of a stratum in the stable range, as a g-independent pattern."""

    n: int
    g: int
    framed: bool
    classes: GradedTate
    max_degree: int

    @property
    def in_range(self) -> GradedTate:
        return self.classes.truncate(self.max_degree)


@dataclass(frozen=True, kw_only=True)
class MaroniEntry:
    p: int
    q: int
    weight: int
    mult: int
    known: bool = True

    @property
    def total_degree(self) -> int:
        return self.p + self.q

    @property
    def cohomological_degree(self) -> int:
        return -(self.p + self.q)


@dataclass(kw_only=True)
class MaroniColumn:
    stratum: StratumInfo
    index: int
    window: int
    entries: list[MaroniEntry] = field(default_factory=list)

    @property
    def label(self) -> str:
        return self.stratum.label


@dataclass(kw_only=True)
class MaroniTable:
    g: int
    framed: bool
    columns: list[MaroniColumn] = field(default_factory=list)
    assumptions: list[Assumption] = field(
        default_factory=lambda: [
            Assumption.E1_DEGENERATION,
            Assumption.LERAY_HIRSCH,
            Assumption.KAPPA1_SQUARED_VANISHES,
            Assumption.RANK_ONE_DIFFERENTIALS,
        ]
    )

    def entries(self) -> list[MaroniEntry]:
        return [entry for column in self.columns for entry in column.entries]

    def column(self, n: int) -> MaroniColumn:
        for column in self.columns:
            if column.stratum.n == n:
                return column
        raise KeyError(n)


@dataclass(frozen=True, kw_only=True)
class CancellationPair:
    source: tuple[int, int, int]
    target: tuple[int, int, int]


@dataclass(kw_only=True)
class CancellationReport:
    g: int
    framed: bool
    pairs: list[CancellationPair] = field(default_factory=list)
    # keyed by total degree p + q, which is minus the cohomological degree
    survivors: GradedTate = field(default_factory=GradedTate)
    bound: int = 0
    strict: bool = True
