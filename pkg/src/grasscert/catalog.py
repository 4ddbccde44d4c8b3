"""Presentations, dimensions and low homotopy for every space in scope.

The even Grassmannian ships three presentations:

``verbatim``
    the relation list exactly as printed for G2+R^(2k), including the
    inhomogeneous ``2y^2 - x2^(2k-1)`` and without a relation tying the
    degree-2k generator to the rest;
``amended``
    the printed list with the exponent repaired to ``2k-2``, the missing
    degree-2k relation added and the truncation made explicit;
``corrected``
    ``amended`` with the middle-degree products fixed for even ``k``, where
    the square of the Euler class of the complement is
    ``(-1)^(k-1) e^(2k-2)`` and the middle cup form is hyperbolic.

For odd ``k`` amended and corrected coincide.  All other spaces have a
single presentation and every variant name returns it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .abelian import ZERO, FGAbelianGroup, cyclic
from .grading import GradedRing, RingElement, RingPresentation, compute
from .homotopy import (PiEntry, PiTable, UNKNOWN, cp_from_sphere, grass_fibration, hopf,
                       known, les_base, sphere_table)
from .spaces import (CP, DEFAULT_VARIANT, VARIANTS, GrassEven, GrassOdd, SpaceId, SpaceSpecError,
                     Sphere, StiefelEven, StiefelOdd)


@dataclass(frozen=True)
class RelationTag:
    relation: str
    provenance: str           # "verbatim" or "corrected"
    justification: str = ""


@dataclass(frozen=True)
class SpaceData:
    space: SpaceId
    variant: str
    presentation: RingPresentation
    dimension: int
    pi_low: PiTable
    provenance: tuple[RelationTag, ...]
    additive_groups: tuple[FGAbelianGroup, ...]
    notes: tuple[str, ...] = field(default=())


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise SpaceSpecError(f"unknown variant {variant!r}")


def _even_grass_relations(k: int, variant: str) -> list[tuple[str, str, str]]:
    """``(relation, provenance, justification)`` triples for G2+R^(2k)."""
    s = _sgn(k)
    xm, ym, xt = f"xm{2 * k - 2}", f"ym{2 * k - 2}", f"x{2 * k}"
    printed = [
        (f"{xm} + {ym} + ({s})*x2^{k - 1}", "verbatim", ""),
        (f"2*{xm}^2 - x2^{2 * k - 2}", "verbatim", ""),
        (f"2*x2*{xm} + ({s})*x2^{k}", "verbatim", ""),
    ]
    if variant == "verbatim":
        return printed + [
            (f"2*{ym}^2 - x2^{2 * k - 1}", "verbatim", ""),
            (f"{xm}*{ym}", "verbatim", ""),
            (f"{xt}^2", "verbatim", ""),
            (f"x2^{2 * k - 1}", "verbatim", ""),
        ]
    rels = printed + [
        (f"2*{ym}^2 - x2^{2 * k - 2}", "corrected",
         "exponent 2k-1 is inhomogeneous; squaring the linear relation gives x2^(2k-2)"),
        (f"{xm}*{ym}", "verbatim", ""),
        (f"x2*{xm} + ({s})*{xt}", "corrected",
         "degree 2k has rank 1; names the generator so that 2*x_2k = x2^k"),
        (f"{xt}*{xm}", "corrected", "above the dimension"),
        (f"{xt}*{ym}", "corrected", "above the dimension"),
        (f"{xt}^2", "verbatim", ""),
    ]
    if variant == "corrected" and k % 2 == 0:
        why = "for even k the middle cup form is hyperbolic: eF^2 = (-1)^(k-1) e^(2k-2)"
        rels[1] = (f"{xm}^2", "corrected", why)
        rels[3] = (f"{ym}^2", "corrected", why)
        rels[4] = (f"2*{xm}*{ym} - x2^{2 * k - 2}", "corrected", why)
    return rels


def _presentation(s: SpaceId, variant: str) -> tuple[RingPresentation, tuple[RelationTag, ...]]:
    k = s.n
    name = f"{s.label}@{variant}" if s.kind == "GrassEven" else s.label
    if s.kind == "CP":
        gens, rels = [("x2", 2)], [f"x2^{k + 1}"]
    elif s.kind == "GrassOdd":
        gens, rels = [("x2", 2), (f"x{2 * k}", 2 * k)], [f"x2^{k} - 2*x{2 * k}", f"x{2 * k}^2"]
    elif s.kind == "GrassEven":
        gens = [("x2", 2), (f"xm{2 * k - 2}", 2 * k - 2), (f"ym{2 * k - 2}", 2 * k - 2),
                (f"x{2 * k}", 2 * k)]
        triples = _even_grass_relations(k, variant)
        p = RingPresentation.build(gens, [t[0] for t in triples], s.dimension, name)
        tags = tuple(RelationTag(str(r), t[1], t[2]) for r, t in zip(p.relations, triples))
        return p, tags
    elif s.kind == "StiefelOdd":
        a, b = f"x{2 * k}", f"x{4 * k - 1}"
        gens, rels = [(a, 2 * k), (b, 4 * k - 1)], [f"{a}^2", f"{b}^2", f"2*{a}", f"{a}*{b}"]
    elif s.kind == "StiefelEven":
        a, b = f"x{2 * k - 2}", f"x{2 * k - 1}"
        gens, rels = [(a, 2 * k - 2), (b, 2 * k - 1)], [f"{a}^2", f"{b}^2", f"{a}*{b}"]
    elif s.kind == "Sphere":
        gens, rels = [(f"s{k}", k)], [f"s{k}^2"]
    else:
        gens, rels = [("x2", 2), ("y2", 2)], ["x2^2", "y2^2"]
    p = RingPresentation.build(gens, rels, s.dimension, name)
    return p, tuple(RelationTag(str(r), "verbatim") for r in p.relations)


def presentation_of(s: SpaceId, variant: str = DEFAULT_VARIANT) -> RingPresentation:
    _check_variant(variant)
    return _presentation(s, variant)[0]


@lru_cache(maxsize=None)
def ring_of(s: SpaceId, variant: str = DEFAULT_VARIANT) -> GradedRing:
    """Computed cohomology ring; the verbatim even presentation drops its inhomogeneous relation."""
    p = presentation_of(s, variant)
    mode = "drop" if (s.kind == "GrassEven" and variant == "verbatim") else "error"
    return compute(p, inhomogeneous=mode)


def additive_groups(s: SpaceId, variant: str = DEFAULT_VARIANT) -> list[FGAbelianGroup]:
    """Cohomology groups in degrees ``0..dimension``.

    For V2R^(2k) these are declared rather than read off the ring: the
    printed relation ``x_(2k-2) x_(2k-1) = 0`` would kill the top class.
    """
    if s.kind == "StiefelEven":
        k = s.n
        nonzero = {0, 2 * k - 2, 2 * k - 1, 4 * k - 3}
        return [FGAbelianGroup(1) if d in nonzero else ZERO for d in range(s.dimension + 1)]
    r = ring_of(s, variant)
    return [r.group(d) for d in range(s.dimension + 1)]


def expected_betti(s: SpaceId) -> list[int]:
    """Betti numbers from the known Poincare polynomials, independent of any presentation."""
    dim = s.dimension
    out = [0] * (dim + 1)
    if s.kind in ("CP", "GrassOdd"):
        for d in range(0, dim + 1, 2):
            out[d] = 1
    elif s.kind == "GrassEven":
        for d in range(0, dim + 1, 2):
            out[d] = 1
        out[2 * s.n - 2] = 2
    elif s.kind == "StiefelOdd":
        out[0] = out[dim] = 1
    elif s.kind == "StiefelEven":
        for d in (0, 2 * s.n - 2, 2 * s.n - 1, dim):
            out[d] = 1
    elif s.kind == "Sphere":
        out[0] = out[dim] = 1
    else:
        out[0], out[2], out[4] = 1, 2, 1
    return out


def circle_bundle_total(base: SpaceId) -> SpaceId:
    """Total space of the circle bundle whose Euler class is x2."""
    if base.kind == "CP":
        return Sphere(2 * base.n + 1)
    if base.kind == "GrassOdd":
        return StiefelOdd(base.n)
    if base.kind == "GrassEven":
        return StiefelEven(base.n)
    raise SpaceSpecError(f"no catalog circle bundle over {base}")


def homotopy_table_of(s: SpaceId, max_level: int) -> PiTable:
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    k = s.n
    if s.kind == "Sphere":
        return sphere_table(k, max_level)
    if s.kind == "StiefelOdd":
        return PiTable.from_groups(ZERO if j <= 2 * k - 2 else cyclic(2) if j == 2 * k - 1 else None
                                   for j in range(max_level + 1))
    if s.kind == "StiefelEven":
        return PiTable.from_groups(ZERO if j <= 2 * k - 3 else FGAbelianGroup(1) if j == 2 * k - 2 else None
                                   for j in range(max_level + 1))
    if s.kind in ("CP", "GrassOdd", "GrassEven"):
        fib = hopf(k) if s.kind == "CP" else grass_fibration(s.ambient)
        return les_base(homotopy_table_of(fib.fiber, max_level),
                        homotopy_table_of(fib.total, max_level), max_level)
    return PiTable((known(ZERO),) + (UNKNOWN,) * max_level)


def orientation_of(s: SpaceId, variant: str = DEFAULT_VARIANT) -> RingElement:
    """First basis class of the top group."""
    return ring_of(s, variant).top_class()


def space_data(s: SpaceId, variant: str = DEFAULT_VARIANT) -> SpaceData:
    p, tags = _presentation(s, variant)
    notes = []
    if s.kind == "StiefelEven":
        notes.append(f"printed product relation {p.relations[2]} is unverified: it would force "
                     f"H^{s.dimension} = 0, while the spectral sequence uses Z there; "
                     "additive groups are declared separately")
        notes.append("the filtration argument labels the top group H^(4k-4); it is consumed "
                     f"as H^{s.dimension}")
    if s.kind == "GrassEven" and variant == "verbatim":
        notes.append(f"relation 2*ym^2 - x2^{2 * s.n - 1} is inhomogeneous and is dropped when computing")
    return SpaceData(s, variant, p, s.dimension, homotopy_table_of(s, s.dimension), tags,
                     tuple(additive_groups(s, variant)), tuple(notes))


__all__ = [
    "RelationTag", "SpaceData", "presentation_of", "ring_of", "additive_groups", "expected_betti",
    "circle_bundle_total", "homotopy_table_of", "orientation_of", "space_data",
    "CP", "GrassOdd", "GrassEven", "StiefelOdd", "StiefelEven", "Sphere", "PiEntry",
    "cp_from_sphere",
]
