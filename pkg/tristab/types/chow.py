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

# n1, m1 have degree 1, c2 has degree 2
VARIABLES = ("n1", "m1", "c2")
VARIABLE_DEGREES = (1, 1, 2)

Exponents = tuple[int, int, int]


def monomial_degree(exponents: Exponents) -> int:
    return sum(e * w for e, w in zip(exponents, VARIABLE_DEGREES))


def format_monomial(exponents: Exponents) -> str:
    return "*".join(
        var if exp == 1 else f"{var}^{exp}"
        for var, exp in zip(VARIABLES, exponents)
        if exp
    ) or "1"


@dataclass(frozen=True)
class GradedPolynomial:
    """Homogeneous polynomial in Q[n1, m1, c2] with integer coefficients."""

    terms: tuple[tuple[Exponents, int], ...]

    def __post_init__(self) -> None:
        monomials = [exponents for exponents, _ in self.terms]
        if monomials != sorted(set(monomials), reverse=True):
            raise ValueError(f"Terms {self.terms!r} are not in canonical order")
        if any(coefficient == 0 for _, coefficient in self.terms):
            raise ValueError(f"Terms {self.terms!r} contain a zero coefficient")
        if len({monomial_degree(exponents) for exponents in monomials}) > 1:
            raise ValueError(f"Terms {self.terms!r} are not homogeneous")

    @staticmethod
    def from_terms(terms: dict[Exponents, int]) -> "GradedPolynomial":
        return GradedPolynomial(
            tuple(
                (exponents, coefficient)
                for exponents, coefficient in sorted(terms.items(), reverse=True)
                if coefficient
            )
        )

    @property
    def degree(self) -> int:
        return monomial_degree(self.terms[0][0]) if self.terms else 0

    def coefficient(self, exponents: Exponents) -> int:
        return dict(self.terms).get(exponents, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponents, coefficient in self.terms:
            monomial = format_monomial(exponents)
            if monomial == "1":
                body = str(abs(coefficient))
            elif abs(coefficient) == 1:
                body = monomial
            else:
                body = f"{abs(coefficient)}*{monomial}"
            sign = "-" if coefficient < 0 else "+"
            parts.append(f"{sign} {body}" if parts else f"{'-' if coefficient < 0 else ''}{body}")
        return " ".join(parts)


@dataclass(frozen=True, kw_only=True)
class TschirnhausenIdeal:
    """Relations among n1, m1, c2 on the Maroni stratum of splitting type (a, b)."""

    g: int
    n: int
    b: int
    generators: tuple[GradedPolynomial, ...]

    @property
    def a(self) -> int:
        return self.b - self.n

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(generator.degree for generator in self.generators)
