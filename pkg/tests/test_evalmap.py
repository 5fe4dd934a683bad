import pytest

from tristab.algebra.linalg import ExactMatrix, certified_rank, exact_rank
from tristab.errors import BadChart, CharTooSmall, InvalidSpec, RangeViolation
from tristab.geometry.evalmap import (
    evaluation_matrix,
    paired_fiber_codimension,
    verify_codimension,
)
from tristab.types.points import (
    PQ,
    Admissibility,
    OffE,
    OnE,
    PointConfiguration,
)
from tristab.types.reports import VerificationMode
from tristab.types.surface import SurfaceSpec

PRIME = 2**31 - 1
SPEC = SurfaceSpec(n=1, h=3, d=4)


def test_exact_rank() -> None:
    identity = ExactMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    zero = ExactMatrix.from_rows([[0, 0], [0, 0]], 2)
    assert exact_rank(identity) == 3
    assert exact_rank(identity.over(PRIME)) == 3
    assert exact_rank(zero) == 0
    assert exact_rank(ExactMatrix.from_rows([], 5)) == 0


def test_certified_rank_escalates() -> None:
    matrix = ExactMatrix.from_rows([[3, 6], [1, 2]], 2, prime=3)
    assert exact_rank(matrix) == 1
    assert certified_rank(matrix, 1) == (1, False)
    singular_mod_3 = ExactMatrix.from_rows([[3, 0], [0, 1]], 2, prime=3)
    assert certified_rank(singular_mod_3, 2) == (2, True)


def test_stacked() -> None:
    top = ExactMatrix.from_rows([[1, 0]], 2)
    bottom = ExactMatrix.from_rows([[0, 1]], 2)
    assert exact_rank(top.stacked(bottom)) == 2
    with pytest.raises(ValueError):
        top.stacked(ExactMatrix.from_rows([[1]], 1))


def test_single_point_off_e() -> None:
    config = PointConfiguration((OffE(1, 0, 0),), PRIME)
    matrix = evaluation_matrix(config, SPEC, None)
    assert (matrix.rows, matrix.cols) == (3, 14)
    assert exact_rank(matrix) == 3


def test_empty_configuration() -> None:
    matrix = evaluation_matrix(PointConfiguration((), PRIME), SPEC)
    assert (matrix.rows, matrix.cols) == (0, 14)
    assert exact_rank(matrix) == 0


def test_point_on_e() -> None:
    matrix = evaluation_matrix(PointConfiguration((OnE(1, 1),), PRIME), SPEC)
    assert exact_rank(matrix) == 3


@pytest.mark.parametrize("point", [OnE(1, 0), OnE(0, 1), OnE(2, 3)])
def test_point_on_e_constant_alpha(point: OnE) -> None:
    # d = hn leaves alpha constant: only alpha(p) = 0 and beta(p) = 0 remain
    spec = SurfaceSpec(n=1, h=3, d=3)
    matrix = evaluation_matrix(PointConfiguration((point,), PRIME), spec, None)
    assert matrix.rows == 3
    assert exact_rank(matrix) == 2


def test_bidegree_point() -> None:
    spec = SurfaceSpec(n=0, h=3, d=3)
    matrix = evaluation_matrix(PointConfiguration((PQ(1, 2, 3, 0),), PRIME), spec)
    assert (matrix.rows, matrix.cols) == (3, 16)
    assert exact_rank(matrix) == 3


def test_characteristic_too_small() -> None:
    with pytest.raises(CharTooSmall):
        evaluation_matrix(PointConfiguration((OffE(1, 0, 0),), 3), SPEC, 3)


@pytest.mark.parametrize(
    "config",
    [
        PointConfiguration((OffE(0, 0, 1),), PRIME),
        PointConfiguration((OffE(1, 2, 3), OffE(2, 4, 5)), PRIME),
        PointConfiguration((OffE(1, 2, 3), OffE(1, 2, 3)), PRIME, Admissibility.PAIRED),
        PointConfiguration(
            (OffE(1, 1, 1), OffE(1, 1, 2), OffE(1, 1, 3)), PRIME, Admissibility.PAIRED
        ),
        PointConfiguration((PQ(1, 0, 1, 1),), PRIME),
    ],
)
def test_bad_configurations(config: PointConfiguration) -> None:
    with pytest.raises(BadChart):
        evaluation_matrix(config, SPEC)


def test_verify_codimension() -> None:
    report = verify_codimension(SurfaceSpec(n=1, h=3, d=7), 2, trials=50, seed=0)
    assert report.failures == 0
    assert report.ranks == [6] * 50
    assert report.passed


def test_verify_codimension_bidegree() -> None:
    report = verify_codimension(SurfaceSpec(n=0, h=3, d=3), 2, trials=50)
    assert set(report.ranks) == {6}


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("h", [3, 4])
@pytest.mark.parametrize("N", range(1, 6))
def test_codimension_at_degree_bound(n: int, h: int, N: int) -> None:
    spec = SurfaceSpec(n=n, h=h, d=2 * N + h * n - 1)
    report = verify_codimension(spec, N, trials=50, seed=0)
    assert report.failures == 0
    assert report.expected_rank == 3 * N


def test_verify_codimension_below_bound() -> None:
    with pytest.raises(RangeViolation):
        verify_codimension(SurfaceSpec(n=1, h=3, d=7), 3)


def test_verify_codimension_deterministic() -> None:
    first = verify_codimension(SurfaceSpec(n=2, h=3, d=12), 3, trials=10, seed=42)
    second = verify_codimension(SurfaceSpec(n=2, h=3, d=12), 3, trials=10, seed=42)
    first.elapsed = second.elapsed = None
    assert first == second


def test_sharpness() -> None:
    report = verify_codimension(
        SurfaceSpec(n=1, h=3, d=9), 3, trials=5, mode=VerificationMode.SHARPNESS
    )
    assert report.spec == SurfaceSpec(n=1, h=3, d=7)
    assert report.witness_rank is not None and report.witness_rank < 9
    assert report.passed


def test_sharpness_single_point() -> None:
    report = verify_codimension(
        SurfaceSpec(n=2, h=3, d=8), 1, trials=5, mode=VerificationMode.SHARPNESS
    )
    assert report.spec == SurfaceSpec(n=2, h=3, d=6)
    assert report.ranks == [2] * 5
    assert report.witness_rank == 2
    assert report.passed


def test_sharpness_needs_section() -> None:
    with pytest.raises(InvalidSpec):
        verify_codimension(
            SurfaceSpec(n=0, h=3, d=9), 3, trials=5, mode=VerificationMode.SHARPNESS
        )


@pytest.mark.parametrize(
    "spec,k,singles,codimension,kernel",
    [
        (SurfaceSpec(n=1, h=3, d=9), 1, 0, 6, 28),
        (SurfaceSpec(n=0, h=3, d=5), 2, 0, 12, 12),
        (SurfaceSpec(n=1, h=3, d=9), 0, 0, 0, 34),
        (SurfaceSpec(n=1, h=3, d=9), 1, 1, 9, 25),
    ],
)
def test_paired_fibers(
    spec: SurfaceSpec, k: int, singles: int, codimension: int, kernel: int
) -> None:
    report = paired_fiber_codimension(spec, k, singles=singles)
    assert report.codimension == codimension
    assert report.kernel_dimension == kernel
    assert report.expected_kernel_dimension == kernel


def test_paired_fibers_need_trigonal() -> None:
    with pytest.raises(InvalidSpec):
        paired_fiber_codimension(SurfaceSpec(n=1, h=4, d=9), 1)


def test_paired_fibers_below_bound() -> None:
    with pytest.raises(RangeViolation):
        paired_fiber_codimension(SurfaceSpec(n=1, h=3, d=3), 3)
