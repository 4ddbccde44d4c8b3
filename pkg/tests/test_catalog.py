import pytest

from grasscert.abelian import ZERO, Z, cyclic
from grasscert.catalog import (additive_groups, circle_bundle_total, expected_betti,
                               presentation_of, ring_of, space_data)
from grasscert.grading import integrate, validate_homogeneous
from grasscert.spaces import (CP, S2xS2, GrassEven, GrassOdd, SpaceSpecError, Sphere, StiefelEven,
                              StiefelOdd, grassmannian, parse_space, stiefel)


def test_additive_groups_match_poincare(space):
    groups = additive_groups(space)
    assert len(groups) == space.dimension + 1
    assert [g.free_rank for g in groups] == expected_betti(space)


def test_torsion():
    for k in range(2, 6):
        g = additive_groups(StiefelOdd(k))
        assert g[2 * k] == cyclic(2)
        assert [d for d, x in enumerate(g) if x.torsion] == [2 * k]
    for s in [GrassOdd(k) for k in range(2, 9)] + [GrassEven(k) for k in range(2, 7)]:
        assert all(g.is_free() for g in additive_groups(s))


@pytest.mark.parametrize("k", range(2, 7))
def test_even_variants(k):
    s = GrassEven(k)
    assert validate_homogeneous(presentation_of(s, "verbatim"))
    assert ring_of(s, "verbatim").group(2 * k).free_rank == 2
    for v in ("amended", "corrected"):
        assert not validate_homogeneous(presentation_of(s, v))
        assert ring_of(s, v).poincare_series() == expected_betti(s)
    if k % 2:
        assert presentation_of(s, "amended").relations == presentation_of(s, "corrected").relations


def test_odd_spaces_ignore_variant():
    for v in ("verbatim", "amended", "corrected"):
        assert presentation_of(GrassOdd(3), v).relations == presentation_of(GrassOdd(3)).relations


def test_space_data_notes():
    d = space_data(GrassEven(3), "verbatim")
    assert any("inhomogeneous" in n for n in d.notes)
    assert any(t.provenance == "corrected" for t in space_data(GrassEven(4)).provenance)
    assert space_data(StiefelEven(3)).notes


def test_circle_bundles():
    assert circle_bundle_total(CP(4)) == Sphere(9)
    assert circle_bundle_total(GrassOdd(3)) == StiefelOdd(3)
    assert circle_bundle_total(GrassEven(4)) == StiefelEven(4)
    with pytest.raises(SpaceSpecError):
        circle_bundle_total(S2xS2)


def test_space_grammar():
    assert parse_space("g2+:7") == (GrassOdd(3), "corrected")
    assert parse_space("g2+:8@verbatim") == (GrassEven(4), "verbatim")
    assert parse_space("v2:9") == (StiefelOdd(4), "corrected")
    assert parse_space("cp:5")[0] == CP(5)
    assert parse_space("S2xS2")[0] == S2xS2
    assert grassmannian(4) == GrassEven(2) and stiefel(5) == StiefelOdd(2)
    for bad in ["g2+:3", "cp:0", "x:4", "g2+:7@draft", "v2:2", "g2+7"]:
        with pytest.raises(SpaceSpecError):
            parse_space(bad)
    assert GrassOdd(3).label == "G2+R^7" and GrassOdd(3).dimension == 10
    assert StiefelEven(4).dimension == 13 and GrassEven(4).dimension == 12


def test_low_examples():
    assert additive_groups(Sphere(3)) == [Z, ZERO, ZERO, Z]
    assert additive_groups(S2xS2)[2].free_rank == 2


def middle_form(s, variant):
    r = ring_of(s, variant)
    o = r.top_class()
    k = s.n
    x, y = r.gen(f"xm{2 * k - 2}"), r.gen(f"ym{2 * k - 2}")
    return [[integrate(r, a * b, o) for b in (x, y)] for a in (x, y)]


@pytest.mark.parametrize("k", range(2, 7))
def test_middle_form_parity(k):
    """Odd k: diagonal form.  Even k: hyperbolic form, which the amended list gets wrong."""
    s = GrassEven(k)
    if k % 2:
        assert middle_form(s, "corrected") == [[1, 0], [0, 1]]
    else:
        assert middle_form(s, "corrected") == [[0, 1], [1, 0]]
        assert middle_form(s, "amended") == [[1, 0], [0, 1]]
