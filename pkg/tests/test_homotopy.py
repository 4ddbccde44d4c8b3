import pytest
from hypothesis import given
from hypothesis import strategies as st

from grasscert.abelian import ZERO, Z, FGAbelianGroup, cyclic, is_exact_at
from grasscert.catalog import homotopy_table_of
from grasscert.homotopy import (UNKNOWN, HomotopyError, PiTable, cp_from_sphere, first_difference,
                                forced_segment, grass_fibration, hopf, known, les_base, sphere_table)
from grasscert.spaces import CP, GrassEven, GrassOdd, Sphere, StiefelOdd


def test_cp5_through_hopf():
    f = hopf(5)
    t = les_base(homotopy_table_of(f.fiber, 11), homotopy_table_of(f.total, 11), 11)
    assert str(t) == "(0,0,Z,0,0,0,0,0,0,0,0,Z)"
    assert [e.group for e in t.entries] == [e.group for e in cp_from_sphere(5, 11).entries]


def test_g2r7_table():
    t = homotopy_table_of(GrassOdd(3), 6)
    assert str(t) == "(0,0,Z,0,0,Z_2,?)"
    assert first_difference(homotopy_table_of(CP(5), 11), homotopy_table_of(GrassOdd(3), 11)) == 5


@pytest.mark.parametrize("k", range(2, 9))
def test_odd_grassmannians_differ_at_2k_minus_1(k):
    a = homotopy_table_of(GrassOdd(k), 4 * k - 1)
    b = homotopy_table_of(CP(2 * k - 1), 4 * k - 1)
    assert first_difference(a, b) == 2 * k - 1
    assert a[2 * k - 1].group == cyclic(2) and b[2 * k - 1].group == ZERO
    assert b[4 * k - 1].group == Z


def test_unknown_inputs_stay_unknown():
    unknown = PiTable((known(ZERO),) + (UNKNOWN,) * 5)
    t = les_base(unknown, unknown, 5)
    assert t[0].is_zero() and all(not e.known for e in t.entries[1:])


def test_unknown_never_certifies_a_difference():
    a = PiTable((known(ZERO), UNKNOWN, known(Z)))
    b = PiTable((known(ZERO), known(Z), known(Z)))
    assert first_difference(a, b) is None


def test_table_errors():
    with pytest.raises(HomotopyError):
        les_base(sphere_table(1, 2), sphere_table(3, 2), 5)
    with pytest.raises(HomotopyError):
        PiTable((), nonabelian_pi1=True)
    with pytest.raises(HomotopyError):
        cp_from_sphere(0, 3)


def test_fibrations():
    f = grass_fibration(7)
    assert (f.fiber, f.total, f.base) == (Sphere(1), StiefelOdd(3), GrassOdd(3))
    assert grass_fibration(8).base == GrassEven(4)


groups = st.sampled_from([ZERO, Z, cyclic(2), cyclic(3), FGAbelianGroup(2)])
entries = st.one_of(st.just(None), groups)


@given(st.lists(entries, min_size=6, max_size=6), st.lists(entries, min_size=6, max_size=6))
def test_deductions_are_sound(fib, tot):
    """Every Known base entry comes with an exact five-term segment around it."""
    fiber = PiTable.from_groups([ZERO] + fib[1:])
    total = PiTable.from_groups([ZERO] + tot[1:])
    base = les_base(fiber, total, 5)
    for k in range(1, 6):
        if not base[k].known:
            continue
        maps = forced_segment(fiber, total, base, k)
        assert maps is not None
        for f, g in zip(maps, maps[1:]):
            assert is_exact_at(f, g)
