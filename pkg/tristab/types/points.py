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

from dataclasses import dataclass
from enum import StrEnum

from tristab.errors import BadChart


class Admissibility(StrEnum):
    GENERIC = "generic"
    PAIRED = "paired"


@dataclass(frozen=True)
class OffE:
    """Point of F_n away from E_n in the weighted chart; [x:y] is its fiber."""

    x: int
    y: int
    z: int

    @property
    def fiber(self) -> tuple[int, int]:
        return (self.x, self.y)

    def check_chart(self, modulus: int) -> None:
        if self.x % modulus == 0 and self.y % modulus == 0:
            raise BadChart(f"{self!r} lies on E_n, not in the weighted chart")


@dataclass(frozen=True)
class OnE:
    """Point [x0:y0] of the exceptional section E_n."""

    x0: int
    y0: int

    @property
    def fiber(self) -> tuple[int, int]:
        return (self.x0, self.y0)

    def check_chart(self, modulus: int) -> None:
        if self.x0 % modulus == 0 and self.y0 % modulus == 0:
            raise BadChart(f"{self!r} is not a point of E_n")


@dataclass(frozen=True)
class PQ:
    """Point ([X0:X1], [Y0:Y1]) of P^1 x P^1, ruled by the projection to [Y0:Y1]."""

    X0: int
    X1: int
    Y0: int
    Y1: int

    @property
    def fiber(self) -> tuple[int, int]:
        return (self.Y0, self.Y1)

    def check_chart(self, modulus: int) -> None:
        if (self.X0 % modulus == 0 and self.X1 % modulus == 0) or (
            self.Y0 % modulus == 0 and self.Y1 % modulus == 0
        ):
            raise BadChart(f"{self!r} has a vanishing projective factor")


SurfacePoint = OffE | OnE | PQ


def fiber_coordinate(point: SurfacePoint, modulus: int) -> int:
    """Affine coordinate of the point's fiber in F_modulus, `modulus` standing for infinity."""
    s, t = point.fiber
    if t % modulus == 0:
        return modulus
    return s * pow(t, -1, modulus) % modulus


@dataclass(frozen=True)
class PointConfiguration:
    """Points with integer coordinates read in F_modulus, each tagged by its fiber."""

    points: tuple[SurfacePoint, ...]
    modulus: int
    admissibility: Admissibility = Admissibility.GENERIC

    @property
    def ruling_lines(self) -> tuple[int, ...]:
        return tuple(fiber_coordinate(point, self.modulus) for point in self.points)

    def __len__(self) -> int:
        return len(self.points)

    def validate(self) -> "PointConfiguration":
        for point in self.points:
            point.check_chart(self.modulus)
        if len(set(self.points)) != len(self.points):
            raise BadChart("Points of a configuration must be pairwise distinct")
        limit = 1 if self.admissibility == Admissibility.GENERIC else 2
        lines = self.ruling_lines
        for line in set(lines):
            if (count := lines.count(line)) > limit:
                raise BadChart(
                    f"{count} points share the fiber {line}, "
                    f"at most {limit} allowed in {self.admissibility} mode"
                )
        return self
