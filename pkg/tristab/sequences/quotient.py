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
from logging import getLogger

from tristab.algebra.chow import euler_ranks
from tristab.algebra.graded import divide, tensor, tensor_all
from tristab.errors import Inconsistent, InvalidSpec, RangeViolation
from tristab.geometry.surface import stratum
from tristab.sequences.vassiliev import (
    e1_page,
    stable_cohomology_sections,
    stable_max_degree,
    vanishing_cutoff,
)
from tristab.types.graded import GradedTate
from tristab.types.sequences import (
    EulerRanks,
    GysinScenario,
    GysinSolution,
    StablePattern,
)
from tristab.types.surface import SurfaceSpec

_logger = getLogger(__name__)

# classical values, not derived here
H_CSTAR = GradedTate.of((0, 0), (1, -1))
H_SL2 = GradedTate.of((0, 0), (3, -2))
H_GL2 = tensor(H_CSTAR, H_SL2)
H_G0_REDUCTIVE = tensor_all(H_CSTAR, H_SL2, H_SL2)

GROUP_COHOMOLOGY = {
    "C*": H_CSTAR,
    "SL2": H_SL2,
    "GL2": H_GL2,
    "C* x SL2 x SL2": H_G0_REDUCTIVE,
}

# enough room above hn for every class coming from columns 1..4
STABLE_MARGIN = 24
MIN_GENUS = 6


def x_mod_gl2(spec: SurfaceSpec) -> GradedTate:
    spec.validate()
    if spec.n < 1 or spec.h != 3:
        raise InvalidSpec(f"The GL2 quotient is taken for n >= 1 and h = 3, got {spec}")
    page = e1_page(spec)
    # generators of the Borel-Moore homology of the degenerate-matrix locus
    if page.entry(1, 2 * page.v - 2) != {page.v - 1: 1} or page.entry(
        1, 2 * page.v - 4
    ) != {page.v - 2: 2}:
        raise Inconsistent(
            f"E1 page of {spec} lacks the classes detecting the orbit map in column 1"
        )
    sections, max_degree = stable_cohomology_sections(spec)
    quotient = divide(sections, H_GL2, max_degree)
    _logger.debug("X/GL2 for %s: %s", spec, quotient.describe())
    return quotient


def _distribute(
    degree: int,
    available: dict[int, int],
    next_total: dict[int, int],
    given: int | None,
) -> dict[int, int]:
    """Split the rank of the Euler class out of one base degree across weights."""
    forced = {
        weight: max(0, mult - next_total.get(weight - 1, 0))
        for weight, mult in available.items()
    }
    if given is None:
        return {weight: rank for weight, rank in forced.items() if rank}
    if given < sum(forced.values()) or given > sum(available.values()):
        raise Inconsistent(
            f"Euler class rank {given} from degree {degree} is outside "
            f"[{sum(forced.values())}, {sum(available.values())}]"
        )
    chosen = dict(forced)
    remainder = given - sum(forced.values())
    for weight in sorted(available, reverse=True):
        extra = min(remainder, available[weight] - chosen[weight])
        chosen[weight] += extra
        remainder -= extra
    return {weight: rank for weight, rank in chosen.items() if rank}


def gysin_total(base: GradedTate, ranks: dict[tuple[int, int], int], max_degree: int) -> GradedTate:
    """Cohomology of the circle bundle given the base and the Euler class ranks per weight."""
    base_counts = base.counts()
    counts: Counter[tuple[int, int]] = Counter()
    for (degree, weight), mult in base_counts.items():
        cokernel = mult - ranks.get((degree - 2, weight + 1), 0)
        kernel = mult - ranks.get((degree, weight), 0)
        if cokernel < 0 or kernel < 0:
            raise Inconsistent(f"Euler class ranks exceed the base in degree {degree}")
        counts[(degree, weight)] += cokernel
        counts[(degree + 1, weight - 1)] += kernel
    for (degree, weight), rank in ranks.items():
        if rank and degree + 2 <= max_degree and (degree + 2, weight - 1) not in base_counts:
            raise Inconsistent(f"Euler class hits nothing in degree {degree + 2}")
    return GradedTate.from_counts(counts).truncate(max_degree)


def gysin_solution(total: GradedTate, ranks: EulerRanks, max_degree: int) -> GysinSolution:
    if total.in_degree(0) != {0: 1}:
        raise Inconsistent(f"Total space {total.describe()} is not connected")
    total_counts = total.counts()
    base: Counter[tuple[int, int]] = Counter()
    consumed: dict[tuple[int, int], int] = {}

    def in_degree(counts: dict[tuple[int, int], int], degree: int) -> dict[int, int]:
        return {w: m for (d, w), m in counts.items() if d == degree and m}

    for degree in range(max_degree + 1):
        total_here = in_degree(total_counts, degree)
        kernel: Counter[int] = Counter()
        if degree >= 1:
            previous = in_degree(base, degree - 1)
            chosen = _distribute(degree - 1, previous, total_here, ranks.get(degree - 1))
            for weight, rank in chosen.items():
                consumed[(degree - 1, weight)] = rank
            for weight, mult in previous.items():
                kernel[weight - 1] += mult - chosen.get(weight, 0)
        for weight in set(total_here) | set(kernel):
            cokernel = total_here.get(weight, 0) - kernel[weight]
            if cokernel < 0:
                raise Inconsistent(
                    f"Degree {degree} of {total.describe()} is too small for the "
                    f"kernel of the Euler class under ranks {ranks}"
                )
            base[(degree, weight)] += cokernel
        for (source, weight), rank in consumed.items():
            if source == degree - 2:
                base[(degree, weight - 1)] += rank
    solution = GysinSolution(
        base=GradedTate.from_counts(base), ranks=consumed, max_degree=max_degree
    )
    if gysin_total(solution.base, consumed, max_degree) != total.truncate(max_degree):
        raise Inconsistent(f"Base {solution.base.describe()} does not reproduce the total space")
    _logger.debug("Gysin base under ranks %s: %s", ranks, solution.base.describe())
    return solution


def solve_circle_gysin(total: GradedTate, ranks: EulerRanks, max_degree: int) -> GradedTate:
    return gysin_solution(total, ranks, max_degree).base


def circle_gysin_scenarios(
    total: GradedTate, ranks: EulerRanks, max_degree: int, kappa1_squared_dim: int
) -> list[GysinScenario]:
    """Solve under the given ranks and under the opposite hypothesis on kappa_1^2."""
    alternative = ranks.with_rank(2, 0 if ranks.get(2) else 1)
    scenarios = []
    for label, scenario_ranks in (("chosen", ranks), ("alternative", alternative)):
        try:
            solution = gysin_solution(total, scenario_ranks, max_degree)
        except Inconsistent as e:
            scenarios.append(
                GysinScenario(label=label, ranks=scenario_ranks, base=None, accepted=False, reason=str(e))
            )
            continue
        accepted = (scenario_ranks.get(2) or 0) == kappa1_squared_dim
        scenarios.append(
            GysinScenario(
                label=label,
                ranks=scenario_ranks,
                base=solution.base,
                accepted=accepted,
                arrows=[
                    (degree, weight, rank)
                    for (degree, weight), rank in sorted(solution.ranks.items())
                ],
                reason="" if accepted else f"needs dim A^2 = {scenario_ranks.get(2) or 0}",
            )
        )
    return scenarios


def stable_spec(n: int) -> SurfaceSpec:
    return SurfaceSpec(n=n, h=3, d=3 * n + STABLE_MARGIN)


def stratum_window(n: int, g: int) -> int:
    return (g + 2) // 4 if n == 0 else (g - 3 * n + 2) // 4


def _check_range(n: int, g: int) -> None:
    info = stratum(g, n)
    if g < MIN_GENUS:
        raise RangeViolation(
            f"{info.label} in genus {g} has N={vanishing_cutoff(info.spec)}, "
            f"outside the stable range of the discriminant"
        )


def stable_pattern(n: int, g: int, framed: bool = False) -> StablePattern:
    _check_range(n, g)
    _logger.info("Computing %s cohomology of N_%d for g=%d", "framed" if framed else "stable", n, g)
    spec = stable_spec(n)
    top = stable_max_degree(spec)
    if n == 0:
        sections, top = stable_cohomology_sections(spec)
        fiber = tensor(H_CSTAR, H_SL2) if framed else H_G0_REDUCTIVE
        classes = divide(sections, fiber, top)
    else:
        classes = solve_circle_gysin(x_mod_gl2(spec), euler_ranks(g, n), top)
        if framed:
            classes = tensor(classes, H_SL2).truncate(top)
    return StablePattern(
        n=n, g=g, framed=framed, classes=classes, max_degree=stratum_window(n, g)
    )


def stratum_cohomology(n: int, g: int) -> tuple[GradedTate, int]:
    pattern = stable_pattern(n, g)
    return pattern.classes, pattern.max_degree


def framed_stratum_cohomology(n: int, g: int) -> tuple[GradedTate, int]:
    pattern = stable_pattern(n, g, framed=True)
    return pattern.classes, pattern.max_degree
