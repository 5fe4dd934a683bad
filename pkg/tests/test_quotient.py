import pytest

from tristab.errors import Inconsistent, InvalidSpec, RangeViolation
from tristab.sequences.quotient import (
    GROUP_COHOMOLOGY,
    circle_gysin_scenarios,
    framed_stratum_cohomology,
    gysin_total,
    solve_circle_gysin,
    stable_pattern,
    stable_spec,
    stratum_cohomology,
    x_mod_gl2,
)
from tristab.types.graded import GradedTate
from tristab.types.sequences import EulerRanks
from tristab.types.surface import SurfaceSpec

SECTIONS_MOD_GL2 = GradedTate.of((0, 0), (3, -2), (5, -3), (8, -5))
STRATUM = GradedTate.of((0, 0), (2, -1), (5, -3), (7, -4))
STRATUM_WITH_KAPPA1_SQUARED = GradedTate.of(
    (0, 0), (2, -1), (3, -2), (4, -2), (5, -3), (7, -4)
)
FRAMED_STRATUM = GradedTate.of(
    (0, 0), (2, -1), (3, -2), (5, -3, 2), (7, -4), (8, -5), (10, -6)
)
RANKS = EulerRanks(ranks={0: 1, 2: 0, 5: 1})


def test_group_cohomology() -> None:
    assert GROUP_COHOMOLOGY["GL2"] == GradedTate.of((0, 0), (1, -1), (3, -2), (4, -3))
    assert GROUP_COHOMOLOGY["C* x SL2 x SL2"].dimension() == 8


@pytest.mark.parametrize(
    "spec", [SurfaceSpec(n=1, h=3, d=25), SurfaceSpec(n=2, h=3, d=30)]
)
def test_x_mod_gl2(spec: SurfaceSpec) -> None:
    assert x_mod_gl2(spec) == SECTIONS_MOD_GL2.truncate(11)


def test_x_mod_gl2_needs_section() -> None:
    with pytest.raises(InvalidSpec):
        x_mod_gl2(SurfaceSpec(n=0, h=3, d=24))


def test_solve_circle_gysin() -> None:
    assert solve_circle_gysin(SECTIONS_MOD_GL2, RANKS, 12) == STRATUM


def test_solve_circle_gysin_kappa1_squared() -> None:
    ranks = RANKS.with_rank(2, 1)
    assert solve_circle_gysin(SECTIONS_MOD_GL2, ranks, 12) == STRATUM_WITH_KAPPA1_SQUARED


def test_solve_trivial_circle() -> None:
    assert solve_circle_gysin(
        GradedTate.of((0, 0), (1, -1)), EulerRanks(), 3
    ) == GradedTate.unit()


def test_solve_circle_gysin_inconsistent_rank() -> None:
    with pytest.raises(Inconsistent):
        solve_circle_gysin(SECTIONS_MOD_GL2, EulerRanks(ranks={0: 2}), 12)


def test_solve_circle_gysin_disconnected() -> None:
    with pytest.raises(Inconsistent):
        solve_circle_gysin(GradedTate.of((0, 0, 2)), EulerRanks(), 3)


def test_gysin_total_reconstructs() -> None:
    ranks = {(0, 0): 1, (5, -3): 1}
    assert gysin_total(STRATUM, ranks, 12) == SECTIONS_MOD_GL2


def test_circle_gysin_scenarios() -> None:
    chosen, alternative = circle_gysin_scenarios(SECTIONS_MOD_GL2, RANKS, 12, 0)
    assert chosen.accepted and chosen.base == STRATUM
    assert (chosen.label, alternative.label) == ("chosen", "alternative")
    assert not alternative.accepted
    assert alternative.base == STRATUM_WITH_KAPPA1_SQUARED
    assert alternative.ranks.get(2) == 1
    assert (0, 0, 1) in chosen.arrows


@pytest.mark.parametrize("n,g,window", [(1, 21, 5), (2, 20, 4), (3, 21, 3), (4, 20, 2)])
def test_stratum_cohomology(n: int, g: int, window: int) -> None:
    classes, max_degree = stratum_cohomology(n, g)
    assert classes == STRATUM
    assert max_degree == window == (g - 3 * n + 2) // 4


@pytest.mark.parametrize("g", [8, 20, 33, 40])
def test_stratum_cohomology_main(g: int) -> None:
    if g % 2:
        g -= 1
    classes, max_degree = stratum_cohomology(0, g)
    assert classes == GradedTate.of((0, 0), (5, -3))
    assert max_degree == (g + 2) // 4


def test_stratum_cohomology_out_of_range() -> None:
    with pytest.raises(RangeViolation):
        stratum_cohomology(1, 5)


def test_framed_stratum_cohomology() -> None:
    classes, max_degree = framed_stratum_cohomology(1, 21)
    assert classes == FRAMED_STRATUM
    assert max_degree == 5
    classes, _ = framed_stratum_cohomology(0, 20)
    assert classes == GradedTate.of((0, 0), (3, -2), (5, -3), (8, -5))


def test_stable_pattern() -> None:
    pattern = stable_pattern(2, 20)
    assert pattern.in_range == STRATUM.truncate(4)
    assert not pattern.framed
    assert stable_spec(2) == SurfaceSpec(n=2, h=3, d=30)
