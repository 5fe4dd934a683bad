import pytest

from tristab.errors import InvalidSpec
from tristab.geometry.confspace import (
    CellStratification,
    gaussian_binomial,
    grassmannian_bm,
    twisted_bm_config,
)
from tristab.types.graded import GradedTate

HIRZEBRUCH = CellStratification.hirzebruch()
PLANE_MINUS_POINT = CellStratification((2, 1))

HIRZEBRUCH_CONFIGURATIONS = {
    1: GradedTate.of((0, 0), (2, 1, 2), (4, 2)),
    2: GradedTate.of((2, 1, 2), (4, 2, 2), (6, 3, 2)),
    3: GradedTate.of((4, 2), (6, 3, 2), (8, 4)),
    4: GradedTate.of((8, 4)),
    5: GradedTate(),
    6: GradedTate(),
}


@pytest.mark.parametrize("k,expected", HIRZEBRUCH_CONFIGURATIONS.items())
def test_hirzebruch_configurations(k: int, expected: GradedTate) -> None:
    assert twisted_bm_config(HIRZEBRUCH, k) == expected


def test_plane_minus_point() -> None:
    assert twisted_bm_config(PLANE_MINUS_POINT, 2) == GradedTate.of((6, 3))
    assert twisted_bm_config(PLANE_MINUS_POINT, 3) == GradedTate()


def test_no_points() -> None:
    assert twisted_bm_config(HIRZEBRUCH, 0) == GradedTate.unit()


def test_cells_are_sorted() -> None:
    assert CellStratification((0, 1, 2, 1)) == HIRZEBRUCH


@pytest.mark.parametrize("cells", [(), (2, -1)])
def test_invalid_cells(cells: tuple[int, ...]) -> None:
    with pytest.raises(InvalidSpec):
        CellStratification(cells)


def test_gaussian_binomial() -> None:
    assert gaussian_binomial(3, 2).coeffs() == [1, 1, 1]
    assert gaussian_binomial(4, 2)(1) == 6
    assert gaussian_binomial(3, 4) == 0


@pytest.mark.parametrize(
    "k,m,expected",
    [
        (1, 3, GradedTate.of((0, 0), (2, 1), (4, 2))),
        (2, 3, GradedTate.of((2, 1), (4, 2), (6, 3))),
        (4, 3, GradedTate()),
        (0, 3, GradedTate.unit()),
    ],
)
def test_grassmannian(k: int, m: int, expected: GradedTate) -> None:
    assert grassmannian_bm(k, m) == expected


def test_grassmannian_matches_projective_configurations() -> None:
    for dimension in range(7):
        cells = CellStratification.projective_space(dimension)
        for k in range(9):
            assert twisted_bm_config(cells, k) == grassmannian_bm(k, dimension + 1)


def test_invalid_grassmannian() -> None:
    with pytest.raises(InvalidSpec):
        grassmannian_bm(-1, 3)
    with pytest.raises(InvalidSpec):
        twisted_bm_config(HIRZEBRUCH, -1)
