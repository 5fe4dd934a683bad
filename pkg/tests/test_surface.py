import pytest

from tristab.errors import InvalidSpec, InvalidStratum
from tristab.geometry.surface import (
    genus_to_degree,
    maroni_strata,
    monomial_basis,
    row_lengths,
    section_dimension,
    stratification_chain,
    stratum,
)
from tristab.types.surface import SurfaceSpec, WeightedMonomial


@pytest.mark.parametrize(
    "n,h,d,dimension",
    [
        (1, 3, 5, 18),
        (0, 3, 7, 32),
        (2, 4, 8, 25),
        (1, 3, 3, 10),
        (1, 3, 25, 98),
    ],
)
def test_section_dimension(n: int, h: int, d: int, dimension: int) -> None:
    spec = SurfaceSpec(n=n, h=h, d=d)
    assert section_dimension(spec) == dimension
    assert len(monomial_basis(spec)) == dimension


def test_trigonal_section_dimension_formula() -> None:
    for n in range(6):
        for d in range(3 * n, 3 * n + 12):
            assert section_dimension(SurfaceSpec(n=n, d=d)) == 4 * d + 4 - 6 * n


def test_monomial_basis_order() -> None:
    spec = SurfaceSpec(n=1, h=3, d=3)
    assert row_lengths(1, 3, 3) == [1, 2, 3, 4]
    basis = monomial_basis(spec)
    assert basis[0] == WeightedMonomial(0, 0, 3)
    assert basis[1:3] == [WeightedMonomial(1, 0, 2), WeightedMonomial(0, 1, 2)]
    assert basis[-1] == WeightedMonomial(0, 3, 0)
    assert all(m.a + m.b + m.c * spec.n == spec.d for m in basis)


def test_empty_rows() -> None:
    assert row_lengths(3, 3, 7) == [0, 2, 5, 8]


@pytest.mark.parametrize(
    "spec",
    [
        SurfaceSpec(n=-1, d=5),
        SurfaceSpec(n=1, h=2, d=5),
        SurfaceSpec(n=2, d=5),
    ],
)
def test_invalid_spec(spec: SurfaceSpec) -> None:
    with pytest.raises(InvalidSpec):
        section_dimension(spec)


def test_maroni_strata_genus_5() -> None:
    (info,) = maroni_strata(5)
    assert (info.n, info.d, info.codim, info.dim) == (1, 5, 0, 11)


def test_maroni_strata_genus_10() -> None:
    strata = maroni_strata(10)
    assert [info.n for info in strata] == [0, 2, 4]
    assert [info.d for info in strata] == [6, 9, 12]
    assert [info.dim for info in strata] == [21, 20, 18]
    assert [info.codim for info in strata] == [0, 1, 3]


def test_maroni_strata_genus_11() -> None:
    strata = maroni_strata(11)
    assert [info.n for info in strata] == [1, 3]
    assert [info.d for info in strata] == [8, 11]


def test_maroni_strata_genus() -> None:
    for g in range(5, 41):
        for info in maroni_strata(g):
            assert info.spec.genus == g
            assert info.n <= (g + 2) / 3


def test_maroni_strata_small_genus() -> None:
    with pytest.raises(InvalidSpec):
        maroni_strata(4)


def test_genus_to_degree_parity() -> None:
    assert genus_to_degree(20, 2) == 14
    with pytest.raises(InvalidStratum):
        genus_to_degree(20, 1)


def test_missing_stratum() -> None:
    with pytest.raises(InvalidStratum):
        stratum(10, 6)


@pytest.mark.parametrize("g", range(6, 41))
def test_stratification_chain(g: int) -> None:
    chain = stratification_chain(g)
    assert chain[0].codim_in_previous == 0
    for closed in chain[1:]:
        assert closed.codim_in_previous == (1 if closed.n == 2 else 2)
