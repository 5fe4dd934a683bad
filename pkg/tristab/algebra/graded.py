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
from functools import reduce
from logging import getLogger

from tristab.errors import NotDivisible
from tristab.types.graded import GradedTate

_logger = getLogger(__name__)


def tensor(a: GradedTate, b: GradedTate) -> GradedTate:
    counts: Counter[tuple[int, int]] = Counter()
    for degree_a, weight_a, mult_a in a:
        for degree_b, weight_b, mult_b in b:
            counts[(degree_a + degree_b, weight_a + weight_b)] += mult_a * mult_b
    return GradedTate.from_counts(counts)


def tensor_all(*factors: GradedTate) -> GradedTate:
    return reduce(tensor, factors, GradedTate.unit())


def twist_shift(a: GradedTate, d_degree: int, d_weight: int) -> GradedTate:
    return GradedTate(
        tuple(
            (degree + d_degree, weight + d_weight, mult) for degree, weight, mult in a
        )
    )


def divide(
    total: GradedTate, fiber: GradedTate, max_degree: int | None = None
) -> GradedTate:
    """Leray-Hirsch quotient: the q with tensor(q, fiber) == total.

    With `max_degree` the total is only known up to that degree and the
    quotient is computed up to it as well.
    """
    if fiber.in_degree(0) != {0: 1} or (fiber.bottom_degree or 0) < 0:
        raise ValueError(f"Fiber {fiber.describe()} does not start with a single Q in degree 0")
    if not total:
        return GradedTate()
    limit = max_degree if max_degree is not None else total.top_degree
    assert limit is not None
    remainder: Counter[tuple[int, int]] = Counter(total.truncate(limit).counts())
    quotient: dict[tuple[int, int], int] = {}
    start = total.bottom_degree
    assert start is not None
    for degree in range(start, limit + 1):
        for (deg, weight), mult in sorted(remainder.items()):
            if deg != degree or mult == 0:
                continue
            if mult < 0:
                raise NotDivisible(
                    f"{total.describe()} is not divisible by {fiber.describe()}: "
                    f"multiplicity {mult} of Q({weight}) in degree {degree}"
                )
            quotient[(degree, weight)] = mult
            for fiber_degree, fiber_weight, fiber_mult in fiber:
                if degree + fiber_degree > limit:
                    if max_degree is None:
                        raise NotDivisible(
                            f"{total.describe()} is not divisible by {fiber.describe()}: "
                            f"nothing above degree {limit} to absorb Q({weight + fiber_weight}) "
                            f"in degree {degree + fiber_degree}"
                        )
                    continue
                remainder[(degree + fiber_degree, weight + fiber_weight)] -= (
                    mult * fiber_mult
                )
    result = GradedTate.from_counts(quotient)
    _logger.debug(
        "Divided %s by %s up to degree %d: %s",
        total.describe(),
        fiber.describe(),
        limit,
        result.describe(),
    )
    return result
