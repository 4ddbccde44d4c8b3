import itertools
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscert.abelian import FGAbelianGroup, cyclic
from grasscert.catalog import presentation_of, ring_of
from grasscert.grading import (GeneratorSpec, GradingError, InhomogeneousError, PolynomialExpr,
                               RingMismatch, RingPresentation, compute, integrate, koszul_sign,
                               lint_odd_squares, monomials_of_degree, parse_polynomial, parse_presentation,
                               truncation_violations, validate_homogeneous)
from grasscert.spaces import CP, S2xS2, GrassEven, GrassOdd, StiefelOdd

from conftest import CATALOG
from oracles import brute_force_groups


@pytest.mark.parametrize("variant", ["amended", "corrected"])
def test_engine_matches_brute_force(space, variant):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r = ring_of(space, variant)
    assert r.groups() == brute_force_groups(presentation_of(space, variant))


def test_verbatim_even_brute_force():
    for k in range(2, 7):
        p = presentation_of(GrassEven(k), "verbatim")
        assert ring_of(GrassEven(k), "verbatim").groups() == brute_force_groups(p)


def test_parse_and_print_round_trip():
    gens = (GeneratorSpec("x", 2), GeneratorSpec("y", 3))
    for text in ["x^3 - 2*x*y", "y^2", "3*x + 0", "-(x^2)*y + x*y*x"]:
        e = parse_polynomial(text, gens)
        assert parse_polynomial(str(e), gens) == e
    assert parse_polynomial("x*y - y*x", gens).is_zero()
    with pytest.raises(GradingError):
        parse_polynomial("x + z", gens)
    with pytest.raises(GradingError):
        parse_polynomial("x / 2", gens)


def test_koszul_sign():
    degs = (1, 1)
    assert koszul_sign((1, 0), (0, 1), degs) == 1
    assert koszul_sign((0, 1), (1, 0), degs) == -1
    assert koszul_sign((0, 1), (1, 0), (2, 1)) == 1
    gens = (GeneratorSpec("a", 1), GeneratorSpec("b", 1))
    a, b = (PolynomialExpr.generator(gens, n) for n in "ab")
    assert b * a == -(a * b)


def test_presentation_text_round_trip():
    p = presentation_of(GrassOdd(3))
    q = parse_presentation(p.to_text(), p.name)
    assert q.relations == p.relations and q.top_degree == p.top_degree
    with pytest.raises(GradingError):
        parse_presentation("gen x 2\nrel x^3\n")


def test_validate_homogeneous():
    p = RingPresentation.build([("x", 2), ("y", 4)], ["x^2 - y", "y - x", "x^3"], 8)
    bad = validate_homogeneous(p)
    assert [v.index for v in bad] == [1]
    assert bad[0].degrees == frozenset({2, 4})
    with pytest.raises(InhomogeneousError):
        compute(p)
    assert compute(p, inhomogeneous="drop").group(4) == FGAbelianGroup(1)


def test_odd_square_lint():
    p = RingPresentation.build([("a", 3)], [], 6)
    assert lint_odd_squares(p)
    with pytest.warns(UserWarning):
        r = compute(p)
    # 2a^2 = 0 from graded commutativity
    assert r.group(6) == cyclic(2)
    assert not lint_odd_squares(RingPresentation.build([("a", 3)], ["a^2"], 6))


def test_cp_ring():
    r = ring_of(CP(5))
    x = r.gen("x2")
    assert [r.group(d) for d in range(11)] == [FGAbelianGroup(1 - d % 2) for d in range(11)]
    assert (x ** 5).coords == (1,)
    assert r.normal_form(parse_polynomial("x2^6", r.gens)).coords == ()


def test_odd_grassmannian_relation():
    for k in range(2, 9):
        r = ring_of(GrassOdd(k))
        assert r.gen("x2") ** k == 2 * r.gen(f"x{2 * k}")


def test_torsion_example():
    p = RingPresentation.build([("a", 2)], ["2*a^2", "a^3"], 6)
    r = compute(p)
    assert r.groups() == [FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup(1),
                          FGAbelianGroup(), cyclic(2), FGAbelianGroup(), FGAbelianGroup()]


def test_integrate():
    r = ring_of(S2xS2)
    x, y = r.gen("x2"), r.gen("y2")
    o = r.top_class()
    assert abs(integrate(r, x * y, o)) == 1
    assert integrate(r, x * x, o) == 0
    with pytest.raises(GradingError):
        integrate(r, x, o)
    with pytest.raises(RingMismatch):
        integrate(ring_of(CP(2)), x * y, o)


def test_truncation_clean(space):
    p = presentation_of(space)
    assert truncation_violations(p, space.dimension) == []


def _elements(r):
    out = []
    for d in range(r.top_degree + 1):
        for i in range(r.group(d).ngens):
            out.append(r.basis_element(d, i))
    return out


@pytest.mark.parametrize("s", [s for s in CATALOG if s.dimension <= 20], ids=lambda s: s.label)
def test_commutative_and_associative(s):
    for variant in ("verbatim", "amended", "corrected"):
        r = ring_of(s, variant)
        els = _elements(r)
        for a in els:
            for b in els:
                if a.degree + b.degree > r.top_degree:
                    continue
                sign = -1 if (a.degree * b.degree) % 2 else 1
                assert a * b == sign * (b * a)
        for a, b, c in itertools.product(els, repeat=3):
            if a.degree + b.degree + c.degree <= r.top_degree:
                assert (a * b) * c == a * (b * c)


def _homogeneous(gens, degs, d, coeffs):
    monos = monomials_of_degree(degs, d)
    return PolynomialExpr(gens, {m: c for m, c in zip(monos, coeffs)})


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([GrassOdd(4), GrassEven(4), StiefelOdd(3), S2xS2]),
       st.integers(0, 8), st.integers(0, 8),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_normal_form_is_multiplicative(s, da, db, ca, cb):
    r = ring_of(s)
    degs = r.presentation.degrees
    a = _homogeneous(r.gens, degs, da, ca)
    b = _homogeneous(r.gens, degs, db, cb)
    lhs = r.normal_form(a * b, degree=da + db)
    assert lhs == r.normal_form(a, degree=da) * r.normal_form(b, degree=db)
