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

"""Graded pieces of Q[n1, m1, c2]/I for the ideal of relations on a Maroni stratum.

Dimensions are computed degree by degree from Macaulay matrices: the span of
all products (monomial x generator) landing in degree t is the degree-t part
of I, so no Groebner basis is needed in low degree.
"""

from logging import getLogger

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from tristab.algebra.linalg import DEFAULT_PRIME, ExactMatrix, certified_rank
from tristab.errors import InvalidStratum
from tristab.geometry.surface import genus_to_degree
from tristab.types.chow import Exponents, GradedPolynomial, TschirnhausenIdeal
from tristab.types.sequences import EulerRanks

_logger = getLogger(__name__)

_RING, _n1, _m1, _c2 = ring("n1,m1,c2", ZZ)

# the Euler class relation in base degree 5 is forced by the degree-8 class of the total space
FORCED_RANKS = {5: 1}


def _from_ring(element: PolyElement) -> GradedPolynomial:
    return GradedPolynomial.from_terms(
        {exponents: int(coefficient) for exponents, coefficient in element.terms()}
    )


def _to_ring(polynomial: GradedPolynomial) -> PolyElement:
    return _RING.from_dict(dict(polynomial.terms))


def ideal_generators(g: int, n: int) -> TschirnhausenIdeal:
    if n < 1:
        raise InvalidStratum(f"The ideal of relations is only used for n >= 1, got n={n}")
    genus_to_degree(g, n)
    if g < 5 or 3 * n > g + 2:
        raise InvalidStratum(f"There is no stratum with Maroni invariant {n} in genus {g}")
    b = (g + n + 2) // 2
    n1, m1, c2 = _n1, _m1, _c2
    generators = (
        (-9 * b + 8 * g + 12) * n1 + (9 * b - g - 6) * m1,
        4 * n1**2
        - n1 * m1
        + 4 * m1**2
        + (-9 * b**2 + 9 * b * g - 4 * g**2 + 18 * b - 12 * g - 8) * c2,
        (-12 * b + 12 * g + 20) * n1**2
        - 2 * n1 * m1
        + (12 * b - 4) * m1**2
        + (
            -12 * b**2 * g
            + 12 * b * g**2
            - 4 * g**3
            - 18 * b**2
            + 42 * b * g
            - 20 * g**2
            + 36 * b
            - 32 * g
            - 16
        )
        * c2,
        4 * n1**3
        + 4 * m1**3
        + (-12 * b**2 + 24 * b * g - 12 * g**2 + 42 * b - 40 * g - 32) * n1 * c2
        + (-12 * b**2 + 6 * b + 2 * g + 4) * m1 * c2,
    )
    ideal = TschirnhausenIdeal(
        g=g, n=n, b=b, generators=tuple(_from_ring(generator) for generator in generators)
    )
    _logger.debug(
        "Generators for g=%d, n=%d: %r", g, n, [str(gen) for gen in ideal.generators]
    )
    return ideal


def degree_monomials(degree: int) -> list[Exponents]:
    return sorted(
        (
            (a, degree - 2 * c - a, c)
            for c in range(degree // 2 + 1)
            for a in range(degree - 2 * c + 1)
        ),
        reverse=True,
    )


def macaulay_matrix(
    ideal: TschirnhausenIdeal, degree: int, prime: int | None = DEFAULT_PRIME
) -> ExactMatrix:
    columns = {monomial: index for index, monomial in enumerate(degree_monomials(degree))}
    rows = []
    for generator in ideal.generators:
        if generator.degree > degree:
            continue
        element = _to_ring(generator)
        for multiplier in degree_monomials(degree - generator.degree):
            product = element * _RING.from_dict({multiplier: 1})
            row = [0] * len(columns)
            for exponents, coefficient in product.terms():
                row[columns[exponents]] = int(coefficient)
            rows.append(row)
    return ExactMatrix.from_rows(rows, len(columns), prime)


def truncated_quotient_dims(
    ideal: TschirnhausenIdeal, up_to: int, prime: int | None = DEFAULT_PRIME
) -> list[int]:
    dims = []
    for degree in range(up_to + 1):
        matrix = macaulay_matrix(ideal, degree, prime)
        rank, _ = certified_rank(matrix, min(matrix.rows, matrix.cols))
        dims.append(matrix.cols - rank)
    _logger.info("Quotient dimensions for g=%d, n=%d: %r", ideal.g, ideal.n, dims)
    return dims


def ranks_from_dims(dims: list[int]) -> EulerRanks:
    """Euler class ranks implied by the graded dimensions of the quotient.

    The Euler class is a nonzero multiple of kappa_1, so it acts nontrivially
    on the unit exactly when degree 1 survives; its square survives exactly
    when degree 2 does.
    """
    return EulerRanks(
        ranks={0: 1 if dims[1] >= 1 else 0, 2: dims[2], **FORCED_RANKS}
    )


def euler_ranks(g: int, n: int, prime: int | None = DEFAULT_PRIME) -> EulerRanks:
    return ranks_from_dims(truncated_quotient_dims(ideal_generators(g, n), 2, prime))
