from random import Random

import pytest

from tristab.algebra.graded import divide, tensor, tensor_all, twist_shift
from tristab.errors import NotDivisible
from tristab.sequences.quotient import H_GL2, H_SL2
from tristab.types.graded import GradedTate

STRATUM = GradedTate.of((0, 0), (2, -1), (5, -3), (7, -4))
SECTIONS_MOD_GL2 = GradedTate.of((0, 0), (3, -2), (5, -3), (8, -5))


def _random_space(rng: Random) -> GradedTate:
    return GradedTate.of(
        *(
            (rng.randrange(6), -rng.randrange(4), rng.randrange(1, 3))
            for _ in range(rng.randrange(1, 5))
        )
    )


def test_tensor_unit() -> None:
    assert tensor(STRATUM, GradedTate.unit()) == STRATUM


def test_tensor_single_entries() -> None:
    assert tensor(GradedTate.of((2, -1)), GradedTate.of((3, -2))) == GradedTate.of(
        (5, -3)
    )


def test_tensor_framed_stratum() -> None:
    assert tensor(STRATUM, H_SL2) == GradedTate.of(
        (0, 0), (2, -1), (3, -2), (5, -3, 2), (7, -4), (8, -5), (10, -6)
    )


def test_tensor_associative() -> None:
    rng = Random(7)
    for _ in range(20):
        a, b, c = (_random_space(rng) for _ in range(3))
        assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))
        assert tensor_all(a, b, c) == tensor(a, tensor(b, c))
        assert tensor(a, b) == tensor(b, a)


def test_tensor_dimension_multiplies() -> None:
    rng = Random(11)
    for _ in range(20):
        a, b = _random_space(rng), _random_space(rng)
        assert tensor(a, b).dimension() == a.dimension() * b.dimension()


@pytest.mark.parametrize(
    "space,shift,expected",
    [
        (GradedTate.unit(), (2, -1), GradedTate.of((2, -1))),
        (STRATUM, (0, 0), STRATUM),
        (
            GradedTate.of((0, 0), (2, 1, 2), (4, 2)),
            (2 * (40 - 3), 40 - 3),
            GradedTate.of((74, 37), (76, 38, 2), (78, 39)),
        ),
    ],
)
def test_twist_shift(space: GradedTate, shift: tuple[int, int], expected: GradedTate) -> None:
    assert twist_shift(space, *shift) == expected


def test_divide_round_trip() -> None:
    rng = Random(3)
    fibers = [H_GL2, H_SL2, GradedTate.of((0, 0), (2, -1))]
    for _ in range(30):
        a = _random_space(rng)
        fiber = rng.choice(fibers)
        assert divide(tensor(a, fiber), fiber) == a


def test_divide_by_gl2() -> None:
    assert divide(tensor(SECTIONS_MOD_GL2, H_GL2), H_GL2) == SECTIONS_MOD_GL2


def test_divide_truncated() -> None:
    total = tensor(SECTIONS_MOD_GL2, H_GL2).truncate(6)
    assert divide(total, H_GL2, 6) == SECTIONS_MOD_GL2.truncate(6)


def test_divide_not_divisible() -> None:
    with pytest.raises(NotDivisible):
        divide(GradedTate.of((0, 0), (1, -1)), GradedTate.of((0, 0), (2, -1)))


def test_divide_empty() -> None:
    assert divide(GradedTate(), H_GL2) == GradedTate()


def test_canonical_order_enforced() -> None:
    with pytest.raises(ValueError):
        GradedTate(((2, -1, 1), (0, 0, 1)))
    with pytest.raises(ValueError):
        GradedTate(((0, 0, 0),))


def test_of_sums_repeats() -> None:
    space = GradedTate.of((3, -2), (3, -2), (0, 0))
    assert space.multiplicity(3, -2) == 2
    assert space.entries == ((0, 0, 1), (3, -2, 2))


def test_describe() -> None:
    assert GradedTate.of((4, 2), (6, 3, 2), (8, 4)).describe() == (
        "deg 4: Q(2); deg 6: 2Q(3); deg 8: Q(4)"
    )
    assert GradedTate.of((0, 0), (3, -2, 2)).describe() == "deg 0: Q; deg 3: 2Q(-2)"
    assert GradedTate().describe() == "0"


def test_euler_characteristic() -> None:
    assert H_GL2.euler_characteristic() == 0
    assert STRATUM.euler_characteristic() == 0
    assert STRATUM.truncate(4).euler_characteristic() == 2
