import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from grasscert.abelian import (ZERO, Z, AbelianError, CompositionError, FGAbelianGroup,
                               IllDefinedHom, IntMatrix, PresentedHom, cokernel, cyclic,
                               direct_sum, extensions, image, invariant_factors, is_exact_at,
                               is_injective, is_iso, is_surjective, kernel, smith_normal_form)


def oracle_factors(rows):
    """Nonzero invariant factors from sympy."""
    if not rows or not rows[0]:
        return ()
    return tuple(int(d) for d in sympy_factors(Matrix(rows), domain=ZZ) if d != 0)


def check_snf(rows):
    m = IntMatrix.from_rows(rows, len(rows[0]) if rows else 0)
    r = smith_normal_form(m)
    assert r.U @ m @ r.V == r.D
    assert r.U @ r.U_inv == IntMatrix.identity(m.rows)
    assert r.V @ r.V_inv == IntMatrix.identity(m.cols)
    assert abs(r.U.det()) == 1 and abs(r.V.det()) == 1
    for i in range(r.D.rows):
        for j in range(r.D.cols):
            if i != j:
                assert r.D[i, j] == 0
    diag = [d for d in r.diagonal() if d]
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    # zeros trail the nonzero entries
    assert list(r.diagonal()) == diag + [0] * (len(r.diagonal()) - len(diag))
    return r


# frozen from sympy's invariant factors
SNF_EXAMPLES = [
    ([[2, 4], [6, 8]], (2, 4)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[4, 6], [6, 9]], (1,)),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], (1, 3)),
    ([[0, 0], [0, 0]], ()),
    ([[6]], (6,)),
    ([[2, 0, 0], [0, 4, 0], [0, 0, 8]], (2, 4, 8)),
    ([[12, 18], [18, 30], [6, 12]], (6, 6)),
]


@pytest.mark.parametrize("rows, factors", SNF_EXAMPLES)
def test_snf_examples(rows, factors):
    assert oracle_factors(rows) == factors
    check_snf(rows)
    assert invariant_factors(rows) == factors


def test_snf_is_deterministic():
    rows = [[3, 5, 7], [2, 4, 6], [9, 1, 0]]
    a, b = smith_normal_form(rows), smith_normal_form(rows)
    assert (a.U, a.V, a.D) == (b.U, b.V, b.D)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=1000, deadline=None)
@given(matrices)
def test_snf_random(rows):
    check_snf(rows)
    assert invariant_factors(rows) == oracle_factors(rows)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_matches_sympy(rows):
    assert IntMatrix.from_rows(rows).rank() == Matrix(rows).rank()


def test_group_basics():
    g = FGAbelianGroup.parse("Z^2 + Z/2")
    assert g == FGAbelianGroup(2, (2,))
    assert str(g) == "Z^2 + Z/2" and g.short() == "Z^2+Z_2"
    assert FGAbelianGroup.from_orders([0, 6, 2, 1]) == FGAbelianGroup(1, (2, 6))
    assert FGAbelianGroup.from_orders([4, 6]) == FGAbelianGroup(0, (2, 12))
    assert str(ZERO) == "0" and ZERO.is_trivial()
    assert FGAbelianGroup.parse("Z_2") == cyclic(2)
    assert direct_sum(Z, cyclic(3), cyclic(2)) == FGAbelianGroup(1, (6,))
    assert FGAbelianGroup.from_dict(g.to_dict()) == g
    with pytest.raises(AbelianError):
        FGAbelianGroup(0, (3, 2))
    with pytest.raises(AbelianError):
        FGAbelianGroup(-1)


def test_times_two():
    f = PresentedHom(Z, Z, [[2]])
    assert cokernel(f) == cyclic(2)
    assert kernel(f) == ZERO
    assert image(f) == Z
    assert is_injective(f) and not is_surjective(f) and not is_iso(f)


def test_reduction_mod_two():
    f = PresentedHom(Z, cyclic(2), [[1]])
    assert kernel(f) == Z and cokernel(f) == ZERO and is_surjective(f)


def test_ill_defined():
    with pytest.raises(IllDefinedHom):
        PresentedHom(cyclic(2), Z, [[1]])
    with pytest.raises(IllDefinedHom):
        PresentedHom(cyclic(2), cyclic(3), [[1]])
    PresentedHom(cyclic(2), cyclic(4), [[2]])


def test_composition():
    f = PresentedHom(Z, Z, [[2]])
    g = PresentedHom(Z, cyclic(2), [[1]])
    assert kernel(f.then(g)) == Z
    with pytest.raises(CompositionError):
        g.then(f)


def test_exactness():
    two = PresentedHom(Z, Z, [[2]])
    red = PresentedHom(Z, cyclic(2), [[1]])
    assert is_exact_at(two, red)
    assert not is_exact_at(PresentedHom(Z, Z, [[4]]), red)


def test_extensions():
    assert extensions(Z, cyclic(2)) == [Z, FGAbelianGroup(1, (2,))]
    assert set(extensions(cyclic(2), cyclic(2))) == {cyclic(4), FGAbelianGroup(0, (2, 2))}
    assert extensions(ZERO, Z) == [Z]
    assert extensions(cyclic(2), Z) == [FGAbelianGroup(1, (2,))]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=2, max_size=2))
def test_kernel_image_ranks(rows):
    f = PresentedHom(FGAbelianGroup(3), FGAbelianGroup(2), rows)
    r = Matrix(rows).rank()
    assert kernel(f).free_rank == 3 - r
    assert image(f).free_rank == r
    assert cokernel(f).free_rank == 2 - r
    assert cokernel(f).torsion == tuple(d for d in oracle_factors(rows) if d > 1)
