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
from logging import getLogger

from tristab.errors import InvalidSpec, InvalidStratum
from tristab.types.surface import (
    BidegreeMonomial,
    Monomial,
    StratumInfo,
    SurfaceSpec,
    WeightedMonomial,
)

_logger = getLogger(__name__)


def row_lengths(n: int, h: int, d: int) -> list[int]:
    """Number of coefficients of z^c for c = h, ..., 0; rows of negative degree are empty."""
    return [max(0, d - c * n + 1) for c in range(h, -1, -1)]


def section_dimension(spec: SurfaceSpec) -> int:
    spec.validate()
    return sum(row_lengths(spec.n, spec.h, spec.d))


def monomial_basis(spec: SurfaceSpec) -> list[Monomial]:
    """Monomial basis of the sections, ordered by descending c (or a0), then descending a (or b0)."""
    spec.validate()
    if spec.n == 0:
        return [
            BidegreeMonomial(a0, spec.h - a0, b0, spec.d - b0)
            for a0 in range(spec.h, -1, -1)
            for b0 in range(spec.d, -1, -1)
        ]
    return [
        WeightedMonomial(a, spec.d - c * spec.n - a, c)
        for c in range(spec.h, -1, -1)
        for a in range(spec.d - c * spec.n, -1, -1)
    ]


def genus_to_degree(g: int, n: int) -> int:
    if (g + n) % 2:
        raise InvalidStratum(f"Genus {g} and Maroni invariant {n} differ in parity")
    return (g + 3 * n + 2) // 2


def stratum_dimension(g: int, n: int) -> int:
    return 2 * g + 2 - n - (1 if n == 0 else 0)


def maroni_strata(g: int) -> list[StratumInfo]:
    if g < 5:
        raise InvalidSpec(f"Maroni stratification is only tracked for g >= 5, got g={g}")
    strata = [
        StratumInfo(
            n=n,
            d=genus_to_degree(g, n),
            g=g,
            codim=max(0, n - 1),
            dim=stratum_dimension(g, n),
        )
        for n in range(g % 2, (g + 2) // 3 + 1, 2)
    ]
    _logger.debug("Maroni strata of genus %d: %r", g, strata)
    return strata


def stratum(g: int, n: int) -> StratumInfo:
    for info in maroni_strata(g):
        if info.n == n:
            return info
    raise InvalidStratum(f"There is no stratum with Maroni invariant {n} in genus {g}")


@dataclass(kw_only=True, frozen=True)
class ClosedStratum:
    """Closure of N_n: curves with Maroni invariant at least n."""

    n: int
    dim: int
    codim_in_previous: int


def stratification_chain(g: int) -> list[ClosedStratum]:
    """The chain of closed strata, each of codimension 2 in the previous one
    except the divisor of invariant 2 inside the whole space for even g."""
    strata = maroni_strata(g)
    chain = []
    previous_dim = None
    for info in strata:
        codim = 0 if previous_dim is None else previous_dim - info.dim
        expected = 0 if previous_dim is None else (1 if info.n == 2 else 2)
        if codim != expected:
            raise InvalidStratum(
                f"Closed stratum of invariant {info.n} has codimension {codim}, "
                f"expected {expected}"
            )
        chain.append(ClosedStratum(n=info.n, dim=info.dim, codim_in_previous=codim))
        previous_dim = info.dim
    return chain
