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

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import groupby
from typing import Any

from pydantic import BaseModel, ConfigDict, GetCoreSchemaHandler
from pydantic_core import core_schema

Key = tuple[int, int]


class TateClass(BaseModel):
    """One serialized entry of a graded space: `mult` copies of Q(weight) in `degree`."""

    model_config = ConfigDict(frozen=True)

    degree: int
    weight: int
    mult: int


@dataclass(frozen=True)
class GradedTate:
    """Finitely supported direct sum of Tate twists, keyed by (degree, weight).

    A cohomology class Q(-k) in degree i is stored as (i, -k); a Borel-Moore
    class Q(k) in degree j as (j, k). Entries are kept sorted by degree, then
    weight, with strictly positive multiplicities, so equality is entrywise.
    """

    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        keys = [(degree, weight) for degree, weight, _ in self.entries]
        if keys != sorted(set(keys)):
            raise ValueError(f"Entries of {self.entries!r} are not in canonical order")
        if any(mult <= 0 for _, _, mult in self.entries):
            raise ValueError(f"Entries of {self.entries!r} have nonpositive multiplicity")

    @staticmethod
    def from_counts(counts: Mapping[Key, int]) -> "GradedTate":
        if any(mult < 0 for mult in counts.values()):
            raise ValueError(f"Negative multiplicity in {dict(counts)!r}")
        return GradedTate(
            tuple(
                (degree, weight, mult)
                for (degree, weight), mult in sorted(counts.items())
                if mult
            )
        )

    @staticmethod
    def of(*classes: tuple[int, int] | tuple[int, int, int]) -> "GradedTate":
        """Build from (degree, weight) or (degree, weight, mult) tuples, summing repeats."""
        counts: dict[Key, int] = {}
        for item in classes:
            degree, weight, mult = item if len(item) == 3 else (*item, 1)
            counts[(degree, weight)] = counts.get((degree, weight), 0) + mult
        return GradedTate.from_counts(counts)

    @staticmethod
    def unit() -> "GradedTate":
        return GradedTate(((0, 0, 1),))

    @staticmethod
    def from_records(value: Any) -> "GradedTate":
        if isinstance(value, GradedTate):
            return value
        return GradedTate.of(
            *(
                (record.degree, record.weight, record.mult)
                for record in (
                    item if isinstance(item, TateClass) else TateClass.model_validate(item)
                    for item in value
                )
            )
        )

    def to_records(self) -> list[dict[str, int]]:
        return [record.model_dump() for record in self.classes()]

    @classmethod
    def __get_pydantic_core_schema__(
        cls, source: Any, handler: GetCoreSchemaHandler
    ) -> core_schema.CoreSchema:
        del source, handler
        return core_schema.no_info_plain_validator_function(
            cls.from_records,
            serialization=core_schema.plain_serializer_function_ser_schema(
                cls.to_records
            ),
        )

    def classes(self) -> list[TateClass]:
        return [
            TateClass(degree=degree, weight=weight, mult=mult)
            for degree, weight, mult in self.entries
        ]

    def counts(self) -> dict[Key, int]:
        return {(degree, weight): mult for degree, weight, mult in self.entries}

    def multiplicity(self, degree: int, weight: int) -> int:
        return self.counts().get((degree, weight), 0)

    def in_degree(self, degree: int) -> dict[int, int]:
        return {weight: mult for deg, weight, mult in self.entries if deg == degree}

    def degrees(self) -> list[int]:
        return sorted({degree for degree, _, _ in self.entries})

    @property
    def top_degree(self) -> int | None:
        return self.entries[-1][0] if self.entries else None

    @property
    def bottom_degree(self) -> int | None:
        return self.entries[0][0] if self.entries else None

    def truncate(self, max_degree: int | None) -> "GradedTate":
        if max_degree is None:
            return self
        return GradedTate(
            tuple(entry for entry in self.entries if entry[0] <= max_degree)
        )

    def dimension(self) -> int:
        return sum(mult for _, _, mult in self.entries)

    def euler_characteristic(self) -> int:
        return sum((-1) ** degree * mult for degree, _, mult in self.entries)

    def describe(self) -> str:
        """Human readable form, e.g. `deg 4: Q(2); deg 6: 2Q(3)`."""
        if not self.entries:
            return "0"
        return "; ".join(
            f"deg {degree}: "
            + " + ".join(
                format_twist(weight, mult) for _, weight, mult in entries_in_degree
            )
            for degree, entries_in_degree in groupby(self.entries, lambda e: e[0])
        )

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def format_twist(weight: int, mult: int) -> str:
    prefix = str(mult) if mult != 1 else ""
    return f"{prefix}Q" if weight == 0 else f"{prefix}Q({weight})"


def sum_counts(spaces: Iterable[GradedTate]) -> GradedTate:
    counts: dict[Key, int] = {}
    for space in spaces:
        for degree, weight, mult in space:
            counts[(degree, weight)] = counts.get((degree, weight), 0) + mult
    return GradedTate.from_counts(counts)
