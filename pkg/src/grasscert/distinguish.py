"""Telling spaces apart: group tables, cup-power divisibility, bounded
isomorphism search and homotopy differences.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from math import prod

from .abelian import ZERO, FGAbelianGroup, IntMatrix, PresentedHom, is_iso
from .catalog import additive_groups, homotopy_table_of, ring_of
from .grading import GradedRing, GradingError, PolynomialExpr, RingElement
from .homotopy import first_difference
from .spaces import DEFAULT_VARIANT, SpaceId


class SearchTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class InvariantVector:
    groups: tuple[FGAbelianGroup, ...]
    power_indices: dict          # j -> positive int or math.inf

    def to_dict(self) -> dict:
        return {"groups": [str(g) for g in self.groups],
                "power_indices": {str(j): ("inf" if v == math.inf else v)
                                  for j, v in sorted(self.power_indices.items())}}


def invariants_of(r: GradedRing, generator: RingElement | None = None) -> InvariantVector:
    """Index of ``<g^j>`` in the free part of degree ``2j`` for a generator ``g`` of ``H^2 = Z``."""
    if r.group(2) != FGAbelianGroup(1):
        raise GradingError(f"degree-2 group is {r.group(2)}, not Z: no distinguished generator")
    g = generator if generator is not None else r.basis_element(2, 0)
    if g.degree != 2 or abs(g.coords[0]) != 1:
        raise GradingError("power indices need a generator of H^2")
    indices = {}
    power = r.one()
    for j in range(1, r.top_degree // 2 + 1):
        power = power * g
        free_rank = r.group(2 * j).free_rank
        if free_rank == 0:
            continue
        if free_rank > 1:
            indices[j] = math.inf
        else:
            c = abs(power.coords[0])
            indices[j] = c if c else math.inf
    return InvariantVector(tuple(r.groups()), indices)


def first_index_mismatch(a: InvariantVector, b: InvariantVector) -> int | None:
    for j in sorted(set(a.power_indices) | set(b.power_indices)):
        if a.power_indices.get(j) != b.power_indices.get(j):
            return j
    return None


def _padded(groups, n):
    return list(groups) + [ZERO] * (n - len(groups))


def groups_equal(a: GradedRing | list, b: GradedRing | list,
                 through: int | None = None) -> tuple[bool, int | None]:
    """Degreewise equality; classes above a ring's top degree count as zero."""
    ga = a.groups() if isinstance(a, GradedRing) else list(a)
    gb = b.groups() if isinstance(b, GradedRing) else list(b)
    n = (max(len(ga), len(gb)) - 1) if through is None else through
    ga, gb = _padded(ga, n + 1), _padded(gb, n + 1)
    for d in range(n + 1):
        if ga[d] != gb[d]:
            return False, d
    return True, None


@dataclass(frozen=True)
class IsoWitness:
    images: dict                 # generator name of A -> RingElement of B
    source: GradedRing = field(repr=False)
    target: GradedRing = field(repr=False)

    def to_dict(self) -> dict:
        return {name: {"degree": e.degree, "coords": list(e.coords), "expression": str(e)}
                for name, e in self.images.items()}

    def __str__(self):
        return ", ".join(f"{n} -> {e}" for n, e in self.images.items())


def evaluate(poly: PolynomialExpr, images: list[RingElement], target: GradedRing) -> RingElement:
    """Substitute generator images into ``poly`` and reduce in ``target``."""
    d = poly.degree()
    acc = target.zero(d) if d <= target.top_degree else RingElement(d, (), target)
    for m, c in poly.terms.items():
        term = target.one()
        for img, e in zip(images, m):
            for _ in range(e):
                term = term * img
        if term.degree <= target.top_degree:
            acc = acc + c * term
    return acc


def induced_maps(images: list[RingElement], a: GradedRing, b: GradedRing) -> dict[int, PresentedHom]:
    out = {}
    for d in range(a.top_degree + 1):
        cols = [evaluate(rep, images, b).coords if d <= b.top_degree else ()
                for rep in a.basis(d)]
        out[d] = PresentedHom(a.group(d), b.group(d), IntMatrix.from_columns(cols, b.group(d).ngens))
    return out


def _candidates(group: FGAbelianGroup, bound: int) -> list[tuple[int, ...]]:
    ordered = [0] + [s * v for v in range(1, bound + 1) for s in (1, -1)]
    axes = [ordered if o == 0 else list(range(o)) for o in group.orders()]
    vecs = list(itertools.product(*axes))
    return sorted(vecs, key=lambda v: sum(abs(x) for x in v))


def isomorphism_search(a: GradedRing, b: GradedRing, coeff_bound: int,
                       ceiling: int = 10 ** 7) -> IsoWitness | None:
    """First degree-preserving generator assignment inducing an isomorphism.

    Images are coordinate vectors in ``b``'s basis with free coordinates in
    ``[-coeff_bound, coeff_bound]``.  A generator of ``b`` with the same name
    and degree is tried first, so a ring compared with itself returns the
    identity.  ``None`` means no witness within the bound, not a proof of
    non-isomorphism.
    """
    same, _ = groups_equal(a, b)
    if not same:
        return None
    gens = a.gens
    b_names = {g.name: g for g in b.gens}
    choices = []
    for g in gens:
        if g.degree > b.top_degree:
            choices.append([RingElement(g.degree, (), b)])
            continue
        vecs = [b._make(g.degree, v) for v in _candidates(b.group(g.degree), coeff_bound)]
        if g.name in b_names and b_names[g.name].degree == g.degree:
            seed = b.gen(g.name)
            vecs = [seed] + [v for v in vecs if v != seed]
        choices.append(vecs)
    size = prod(len(c) for c in choices)
    if size > ceiling:
        raise SearchTooLarge(f"{size} candidate assignments exceed the ceiling {ceiling}")

    supports = []
    for rel in a.presentation.relations:
        used = {i for m in rel.terms for i, e in enumerate(m) if e}
        supports.append((max(used, default=-1), rel))

    def consistent(images, upto):
        for last, rel in supports:
            if last == upto and not evaluate(rel, images, b).is_zero():
                return False
        return True

    def dfs(i, images):
        if i == len(gens):
            maps = induced_maps(images, a, b)
            if all(is_iso(f) for f in maps.values()):
                return list(images)
            return None
        for img in choices[i]:
            images.append(img)
            if consistent(images, i):
                hit = dfs(i + 1, images)
                if hit is not None:
                    return hit
            images.pop()
        return None

    if not consistent([], -1):
        return None
    found = dfs(0, [])
    if found is None:
        return None
    return IsoWitness({g.name: img for g, img in zip(gens, found)}, a, b)


def check_witness(w: IsoWitness) -> bool:
    """Relations go to zero and every degree map is invertible over Z."""
    images = [w.images[g.name] for g in w.source.gens]
    for rel in w.source.presentation.relations:
        if not evaluate(rel, images, w.target).is_zero():
            return False
    return all(is_iso(f) for f in induced_maps(images, w.source, w.target).values())


@dataclass
class ComparisonReport:
    spaces: list
    variant: str
    groups_equal: bool
    first_group_mismatch: int | None
    power_indices: dict
    ring_distinguished: dict | None
    iso_search: dict
    pi_tables: dict
    pi_first_difference: int | None
    certificates: list
    verdict: str

    def to_dict(self) -> dict:
        return {
            "spaces": self.spaces, "variant": self.variant,
            "groups_equal": self.groups_equal, "first_group_mismatch": self.first_group_mismatch,
            "power_indices": self.power_indices, "ring_distinguished": self.ring_distinguished,
            "iso_search": self.iso_search, "pi_tables": self.pi_tables,
            "pi_first_difference": self.pi_first_difference,
            "certificates": self.certificates, "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def to_text(self) -> str:
        a, b = self.spaces
        lines = [f"{a} vs {b}  (variant: {self.variant})"]
        if self.groups_equal:
            lines.append("cohomology groups: equal in every degree")
        else:
            lines.append(f"cohomology groups: differ, first in degree {self.first_group_mismatch}")
        for name in (a, b):
            pi = self.power_indices.get(name)
            lines.append(f"power indices {name}: {pi if pi is not None else 'n/a (H^2 is not Z)'}")
        if self.ring_distinguished:
            rd = self.ring_distinguished
            lines.append(f"cup powers differ at j = {rd['j']}: index {rd[a]} vs {rd[b]}")
        lines.append(f"isomorphism search (bound {self.iso_search['bound']}): {self.iso_search['result']}")
        for name in (a, b):
            lines.append(f"pi {name}: {self.pi_tables[name]}")
        if self.pi_first_difference is not None:
            lines.append(f"homotopy groups differ first at level {self.pi_first_difference}")
        for c in self.certificates:
            lines.append(f"certificate: {c}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def full_report(a: SpaceId, b: SpaceId, max_pi_level: int, bound: int = 2,
                variant: str = DEFAULT_VARIANT) -> ComparisonReport:
    ra, rb = ring_of(a, variant), ring_of(b, variant)
    ga, gb = additive_groups(a, variant), additive_groups(b, variant)
    eq, mismatch = groups_equal(ga, gb)

    def indices(r):
        try:
            return invariants_of(r)
        except GradingError:
            return None

    ia, ib = indices(ra), indices(rb)
    power = {a.label: None if ia is None else ia.to_dict()["power_indices"],
             b.label: None if ib is None else ib.to_dict()["power_indices"]}
    ring_diff = None
    if ia is not None and ib is not None:
        j = first_index_mismatch(ia, ib)
        if j is not None:
            ring_diff = {"j": j, a.label: power[a.label].get(str(j)), b.label: power[b.label].get(str(j))}

    if not eq:
        iso = {"bound": bound, "result": "skipped: groups differ"}
    else:
        try:
            w = isomorphism_search(ra, rb, bound)
            iso = {"bound": bound, "result": None if w is None else w.to_dict()}
        except SearchTooLarge as exc:
            iso = {"bound": bound, "result": f"not run: {exc}"}

    pa, pb = homotopy_table_of(a, max_pi_level), homotopy_table_of(b, max_pi_level)
    pi_diff = first_difference(pa, pb)

    certs = []
    if not eq:
        certs.append(f"cohomology groups differ in degree {mismatch}")
    if ring_diff is not None:
        certs.append(f"index of the j-th cup power of the degree-2 generator differs at j = {ring_diff['j']}")
    if pi_diff is not None:
        certs.append(f"pi_{pi_diff} differs: {pa[pi_diff]} vs {pb[pi_diff]}")

    if not eq:
        verdict = "cohomology groups differ, not homotopy-equivalent"
    elif ring_diff is not None or pi_diff is not None:
        verdict = "cohomology-equal, not homotopy-equivalent"
    else:
        verdict = "indistinguishable by this tool"
    return ComparisonReport([a.label, b.label], variant, eq, mismatch, power, ring_diff, iso,
                            {a.label: str(pa), b.label: str(pb)}, pi_diff, certs, verdict)
