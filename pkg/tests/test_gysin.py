import pytest

from grasscert.abelian import ZERO, Z, FGAbelianGroup, cyclic
from grasscert.catalog import additive_groups, circle_bundle_total, ring_of
from grasscert.gysin import (INF, GysinError, InfeasibleProfile, assemble_total, build_e2,
                             d2_from_euler, format_page, gysin_pipeline, page_json,
                             profile_matches, required_d2_profile, take_limit, verify_total)
from grasscert.spaces import CP, GrassEven, GrassOdd, Sphere


def nonzero(page):
    return {pq: str(g) for pq, g in page.entries.items() if not g.is_trivial()}


def test_e2_g2r7():
    e2 = build_e2(ring_of(GrassOdd(3)))
    assert e2.page == 2
    for p in range(11):
        want = Z if p % 2 == 0 else ZERO
        assert e2[(p, 0)] == want and e2[(p, 1)] == want


def test_limit_g2r7():
    r = ring_of(GrassOdd(3))
    e2, d, lim = gysin_pipeline(r)
    assert lim.page == INF
    assert nonzero(lim) == {(0, 0): "Z", (6, 0): "Z/2", (10, 1): "Z"}
    groups = [fa.group for fa in assemble_total(lim)]
    assert groups == additive_groups(circle_bundle_total(GrassOdd(3)))
    assert groups[6] == cyclic(2) and groups[11] == Z


def test_limit_g2r8():
    _, _, lim = gysin_pipeline(ring_of(GrassEven(4)))
    assert nonzero(lim) == {(0, 0): "Z", (6, 0): "Z", (6, 1): "Z", (12, 1): "Z"}


@pytest.mark.parametrize("k", range(2, 9))
def test_odd_profile(k):
    r = ring_of(GrassOdd(k))
    total = additive_groups(circle_bundle_total(GrassOdd(k)))
    prof = required_d2_profile(r.groups(), total)
    for c in prof:
        if c.p == 2 * k - 2:
            assert c.kind == "injective" and c.cokernel == cyclic(2)
        elif c.p % 2 == 0 and c.p + 2 <= 4 * k - 2:
            assert c.kind == "iso"
        else:
            assert c.kind == "zero"
    assert profile_matches(prof, d2_from_euler(r, r.gen("x2"))) == []


def test_even_profile():
    r = ring_of(GrassEven(4))
    prof = required_d2_profile(r.groups(), additive_groups(circle_bundle_total(GrassEven(4))))
    by_p = {c.p: c for c in prof}
    assert by_p[4].kind == "injective" and by_p[4].cokernel == Z
    assert by_p[6].kind == "surjective" and by_p[6].kernel == Z
    assert profile_matches(prof, d2_from_euler(r, r.gen("x2"))) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_hopf(n):
    _, _, lim = gysin_pipeline(ring_of(CP(n)))
    assert verify_total(lim, additive_groups(Sphere(2 * n + 1))).ok


def test_wrong_euler_class_detected():
    r = ring_of(GrassOdd(3))
    _, _, lim = gysin_pipeline(r, 2 * r.gen("x2"))
    rep = verify_total(lim, additive_groups(circle_bundle_total(GrassOdd(3))))
    assert not rep.ok and rep.mismatches()[0] == 2


def test_infeasible_profile():
    base = [Z, ZERO, Z]
    # H^1 = Z forces d2 at p = 0 to vanish, H^2 = 0 forces it onto Z
    with pytest.raises(InfeasibleProfile):
        required_d2_profile(base, [Z, Z, ZERO, Z])
    with pytest.raises(InfeasibleProfile):
        required_d2_profile([Z, ZERO, ZERO], [Z, Z, cyclic(2), ZERO])
    with pytest.raises(GysinError):
        required_d2_profile(base, [Z])


def test_ambiguous_extension():
    # sub Z, quotient Z/2: both Z and Z + Z/2 fit the filtration
    from grasscert.gysin import SSPage
    page = SSPage({(0, 0): Z, (1, 0): Z, (0, 1): cyclic(2)}, {}, 1, INF)
    fa = assemble_total(page)[1]
    assert not fa.known
    assert set(fa.candidates) == {Z, FGAbelianGroup(1, (2,))}
    rep = verify_total(page, [Z, Z, ZERO])
    assert rep.verdicts[1].status == "ambiguous-consistent" and rep.ok


def test_euler_class_checks():
    r = ring_of(GrassOdd(3))
    with pytest.raises(GysinError):
        d2_from_euler(r, r.gen("x6"))
    with pytest.raises(GysinError):
        d2_from_euler(r, ring_of(CP(5)).gen("x2"))
    with pytest.raises(GysinError):
        take_limit(take_limit(build_e2(r), d2_from_euler(r, r.gen("x2"))), None)


def test_page_text_layout():
    e2, _, lim = gysin_pipeline(ring_of(GrassOdd(3)))
    lines = format_page(lim).splitlines()
    assert lines[0].split("|")[1:-1][10].strip() == "Z"
    assert lines[1].startswith("Einf 0") and lines[1].split("|")[1:-1][6].strip() == "Z_2"
    assert lines[2].split() == [str(p) for p in range(11)]
    assert '"page": "inf"' in page_json(lim)
