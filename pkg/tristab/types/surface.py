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
from enum import StrEnum
from math import prod

from tristab.errors import InvalidSpec


class SurfaceModel(StrEnum):
    WEIGHTED = "weighted"
    BIDEGREE = "bidegree"


@dataclass(kw_only=True, frozen=True)
class SurfaceSpec:
    """Sections of O(hE_n + dF_n) on the Hirzebruch surface F_n."""

    n: int
    h: int = 3
    d: int

    def validate(self) -> "SurfaceSpec":
        if self.n < 0:
            raise InvalidSpec(f"Hirzebruch degree must be nonnegative, got n={self.n}")
        if self.h < 3:
            raise InvalidSpec(f"Coefficient of E_n must be at least 3, got h={self.h}")
        if self.d < self.h * self.n:
            raise InvalidSpec(
                f"Sections of {self} need d >= hn = {self.h * self.n}, got d={self.d}"
            )
        return self

    @property
    def model(self) -> SurfaceModel:
        return SurfaceModel.BIDEGREE if self.n == 0 else SurfaceModel.WEIGHTED

    @property
    def genus(self) -> int:
        return 2 * self.d - 3 * self.n - 2

    def with_degree(self, d: int) -> "SurfaceSpec":
        return replace(self, d=d)

    def __str__(self) -> str:
        return f"F_{self.n}: {self.h}E + {self.d}F"


class _Monomial:
    variables: tuple[str, ...] = ()

    @property
    def exponents(self) -> tuple[int, ...]:
        raise NotImplementedError()

    def value_at(self, point: Sequence[int]) -> int:
        return prod(
            coordinate**exponent
            for coordinate, exponent in zip(point, self.exponents, strict=True)
        )

    def partial_at(self, variable: int, point: Sequence[int]) -> int:
        """Value of the formal partial derivative along `variable` at `point`."""
        exponent = self.exponents[variable]
        if not exponent:
            return 0
        return exponent * prod(
            coordinate ** (exp - 1 if index == variable else exp)
            for index, (coordinate, exp) in enumerate(
                zip(point, self.exponents, strict=True)
            )
        )

    def __str__(self) -> str:
        factors = [
            var if exp == 1 else f"{var}^{exp}"
            for var, exp in zip(self.variables, self.exponents)
            if exp
        ]
        return "*".join(factors) or "1"


@dataclass(frozen=True)
class WeightedMonomial(_Monomial):
    """x^a y^b z^c in the weighted ring with deg x = deg y = 1, deg z = n."""

    a: int
    b: int
    c: int

    variables = ("x", "y", "z")

    @property
    def exponents(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class BidegreeMonomial(_Monomial):
    """x0^a0 x1^a1 y0^b0 y1^b1 of bidegree (h, d) on P^1 x P^1."""

    a0: int
    a1: int
    b0: int
    b1: int

    variables = ("x0", "x1", "y0", "y1")

    @property
    def exponents(self) -> tuple[int, ...]:
        return (self.a0, self.a1, self.b0, self.b1)


Monomial = WeightedMonomial | BidegreeMonomial


@dataclass(kw_only=True, frozen=True)
class StratumInfo:
    """One stratum N_n of the Maroni stratification of trigonal curves of genus g."""

    n: int
    d: int
    g: int
    codim: int
    dim: int

    def __post_init__(self) -> None:
        if self.g != 2 * self.d - 3 * self.n - 2 or (self.g - self.n) % 2:
            raise InvalidSpec(f"Inconsistent stratum data {self!r}")

    @property
    def spec(self) -> SurfaceSpec:
        return SurfaceSpec(n=self.n, h=3, d=self.d)

    @property
    def label(self) -> str:
        return f"N_{self.n}"
