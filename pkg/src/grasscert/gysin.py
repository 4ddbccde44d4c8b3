"""Two-row Serre spectral sequence of a circle bundle.

With fiber S^1 the second page has rows ``q = 0`` and ``q = 1``, both
copies of the base cohomology, and the only differential is
``d2(a*x) = e*x`` where ``a`` is the fiber class and ``e`` the Euler
class.  The sequence degenerates at E3, and the total space sits in

    0 -> E_inf^(n,0) -> H^n(E) -> E_inf^(n-1,1) -> 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import (ZERO, FGAbelianGroup, IntMatrix, PresentedHom, cokernel,
                      extensions, kernel)
from .grading import GradedRing, RingElement


class GysinError(ValueError):
    pass


class InfeasibleProfile(GysinError):
    def __init__(self, degree: int, reason: str):
        super().__init__(f"no differential fits at p = {degree}: {reason}")
        self.degree = degree
        self.reason = reason


INF = "inf"


@dataclass(frozen=True)
class SSPage:
    entries: dict            # (p, q) -> FGAbelianGroup
    labels: dict             # (p, q) -> list of basis labels
    top: int
    page: object = 2         # 2 or INF

    def __getitem__(self, pq: tuple[int, int]) -> FGAbelianGroup:
        return self.entries.get(pq, ZERO)

    def to_dict(self) -> dict:
        return {"page": self.page, "top": self.top,
                "entries": [{"p": p, "q": q, "group": str(g), "labels": list(self.labels.get((p, q), []))}
                            for (p, q), g in sorted(self.entries.items())]}


@dataclass(frozen=True)
class Differential:
    maps: dict               # p -> PresentedHom from E^(p,1) to E^(p+2,0)
    euler: str = "x2"

    def __getitem__(self, p: int) -> PresentedHom:
        return self.maps[p]


@dataclass(frozen=True)
class FiltrationAssembly:
    degree: int
    sub: FGAbelianGroup      # E_inf^(n,0)
    quotient: FGAbelianGroup  # E_inf^(n-1,1)
    candidates: tuple[FGAbelianGroup, ...]

    @property
    def known(self) -> bool:
        return len(self.candidates) == 1

    @property
    def group(self) -> FGAbelianGroup:
        if not self.known:
            raise GysinError(f"H^{self.degree} is ambiguous: {[str(c) for c in self.candidates]}")
        return self.candidates[0]

    def __str__(self):
        if self.known:
            return str(self.group)
        return "one of {" + ", ".join(str(c) for c in self.candidates) + "}"


@dataclass(frozen=True)
class Verdict:
    degree: int
    status: str              # "match", "mismatch" or "ambiguous-consistent"
    expected: FGAbelianGroup
    got: str


@dataclass(frozen=True)
class GysinReport:
    verdicts: tuple[Verdict, ...]

    @property
    def ok(self) -> bool:
        return all(v.status != "mismatch" for v in self.verdicts)

    def mismatches(self) -> list[int]:
        return [v.degree for v in self.verdicts if v.status == "mismatch"]

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "verdicts": [{"degree": v.degree, "status": v.status, "expected": str(v.expected),
                              "got": v.got} for v in self.verdicts]}


@dataclass(frozen=True)
class D2Constraint:
    p: int
    kind: str                # iso, injective, surjective, zero, kernel-cokernel, unconstrained
    kernel: FGAbelianGroup | None = None
    cokernel: FGAbelianGroup | None = None

    def __str__(self):
        if self.kind == "injective":
            return f"injective, cokernel {self.cokernel}"
        if self.kind == "surjective":
            return f"surjective, kernel {self.kernel}"
        if self.kind == "kernel-cokernel":
            return f"kernel {self.kernel}, cokernel {self.cokernel}"
        return self.kind


def build_e2(base: GradedRing) -> SSPage:
    entries, labels = {}, {}
    for p in range(base.top_degree + 1):
        g = base.group(p)
        lab = base.basis_labels(p)
        entries[(p, 0)] = g
        entries[(p, 1)] = g
        labels[(p, 0)] = lab
        labels[(p, 1)] = ["a" if x == "1" else f"a*{x}" for x in lab]
    return SSPage(entries, labels, base.top_degree, 2)


def d2_from_euler(base: GradedRing, e: RingElement) -> Differential:
    """Matrices of ``x -> e*x`` from ``E^(p,1)`` to ``E^(p+2,0)``.

    Sign convention: ``d2(a) = +e`` and ``d2(a*x) = d2(a)*x``; the Leibniz
    term ``a*d2(x)`` vanishes because ``x`` sits on the bottom row.
    """
    if e.ring is not base:
        raise GysinError("Euler class is not an element of the base ring")
    if e.degree != 2:
        raise GysinError(f"Euler class must have degree 2, got {e.degree}")
    maps = {}
    for p in range(base.top_degree + 1):
        src = base.group(p)
        tgt = base.group(p + 2)
        cols = [(e * base.basis_element(p, i)).coords if p + 2 <= base.top_degree else ()
                for i in range(src.ngens)]
        maps[p] = PresentedHom(src, tgt, IntMatrix.from_columns(cols, tgt.ngens))
    return Differential(maps, str(e))


def take_limit(page: SSPage, d: Differential) -> SSPage:
    if page.page != 2:
        raise GysinError("take_limit expects the second page")
    entries, labels = {}, {}
    for p in range(page.top + 1):
        entries[(p, 0)] = cokernel(d[p - 2]) if p >= 2 else page[(p, 0)]
        entries[(p, 1)] = kernel(d[p])
        labels[(p, 0)] = page.labels.get((p, 0), [])
        labels[(p, 1)] = page.labels.get((p, 1), [])
    return SSPage(entries, labels, page.top, INF)


def assemble_total(limit: SSPage) -> list[FiltrationAssembly]:
    """``H^n`` of the total space for ``n = 0 .. top + 1``."""
    out = []
    for n in range(limit.top + 2):
        sub, quot = limit[(n, 0)], limit[(n - 1, 1)]
        out.append(FiltrationAssembly(n, sub, quot, tuple(extensions(sub, quot))))
    return out


def verify_total(limit: SSPage, expected: list[FGAbelianGroup]) -> GysinReport:
    assembled = assemble_total(limit)
    if len(expected) != len(assembled):
        raise GysinError(f"expected {len(assembled)} groups (degrees 0..{limit.top + 1}), got {len(expected)}")
    verdicts = []
    for fa, exp in zip(assembled, expected):
        if fa.known:
            status = "match" if fa.group == exp else "mismatch"
        else:
            status = "ambiguous-consistent" if exp in fa.candidates else "mismatch"
        verdicts.append(Verdict(fa.degree, status, exp, str(fa)))
    return GysinReport(tuple(verdicts))


def gysin_pipeline(base: GradedRing, euler: RingElement | None = None) -> tuple[SSPage, Differential, SSPage]:
    e = base.gen("x2") if euler is None else euler
    e2 = build_e2(base)
    d = d2_from_euler(base, e)
    return e2, d, take_limit(e2, d)


def required_d2_profile(base_groups: list[FGAbelianGroup],
                        total_groups: list[FGAbelianGroup]) -> list[D2Constraint]:
    """Kernel and cokernel of each ``d2^(p,1)`` forced by the total space.

    ``ker d^p`` is a quotient of ``H^(p+1)(E)`` and equals it when
    ``H^(p+1)(B) = 0``; ``coker d^p`` is a subgroup of ``H^(p+2)(E)`` and
    equals it when ``H^(p+1)(B) = 0``.
    """
    top = len(base_groups) - 1
    if len(total_groups) != top + 2:
        raise GysinError(f"total space needs {top + 2} groups, got {len(total_groups)}")

    def B(i):
        return base_groups[i] if 0 <= i <= top else ZERO

    def E(i):
        return total_groups[i] if 0 <= i < len(total_groups) else ZERO

    out = []
    for p in range(top + 1):
        src, tgt = B(p), B(p + 2)
        ker = coker = None
        if E(p + 1).is_trivial():
            ker = ZERO
        elif B(p + 1).is_trivial():
            ker = E(p + 1)
        if B(p + 1).is_trivial():
            coker = E(p + 2)
        elif E(p + 2).is_trivial():
            coker = ZERO
        if src.is_trivial() and ker is not None and not ker.is_trivial():
            raise InfeasibleProfile(p, f"kernel {ker} forced but the source is 0")
        if tgt.is_trivial() and coker is not None and not coker.is_trivial():
            raise InfeasibleProfile(p, f"cokernel {coker} forced but the target is 0")
        if ker is not None and ker.free_rank > src.free_rank:
            raise InfeasibleProfile(p, f"kernel {ker} is larger than the source {src}")
        if coker is not None and coker.free_rank > tgt.free_rank:
            raise InfeasibleProfile(p, f"cokernel {coker} is larger than the target {tgt}")
        if ker is not None and coker is not None and src.is_free() and tgt.is_free():
            if src.free_rank - ker.free_rank != tgt.free_rank - coker.free_rank:
                raise InfeasibleProfile(p, f"rank of the image cannot be both "
                                           f"{src.free_rank - ker.free_rank} and {tgt.free_rank - coker.free_rank}")
        if src.is_trivial() or tgt.is_trivial():
            kind = "zero"
        elif ker is not None and ker == src and (coker is None or coker == tgt):
            kind = "zero"
        elif ker is None or coker is None:
            kind = "unconstrained"
        elif ker.is_trivial() and coker.is_trivial():
            kind = "iso"
        elif ker.is_trivial():
            kind = "injective"
        elif coker.is_trivial():
            kind = "surjective"
        else:
            kind = "kernel-cokernel"
        out.append(D2Constraint(p, kind, ker, coker))
    return out


def profile_matches(profile: list[D2Constraint], d: Differential) -> list[int]:
    """Degrees where a computed differential violates the forced profile."""
    bad = []
    for c in profile:
        f = d[c.p]
        k, ck = kernel(f), cokernel(f)
        if (c.kernel is not None and k != c.kernel) or (c.cokernel is not None and ck != c.cokernel):
            bad.append(c.p)
    return bad


def format_page(page: SSPage, labels: bool = True, name: str | None = None) -> str:
    """Plain-text table with the q = 1 row on top and column indices underneath."""
    name = name or ("E2" if page.page == 2 else "Einf")
    cols = list(range(page.top + 1))

    def cell(p, q):
        g = page[(p, q)]
        if g.is_trivial():
            return "0"
        lab = page.labels.get((p, q), []) if labels else []
        if labels and page.page == 2 and lab and g.is_free():
            return " + ".join(f"Z{x}" if x != "1" else "Z1" for x in lab)
        return g.short()

    grid = {(p, q): cell(p, q) for p in cols for q in (0, 1)}
    widths = [max(len(grid[(p, 0)]), len(grid[(p, 1)]), len(str(p))) for p in cols]
    pad = len(name)
    lines = []
    for q in (1, 0):
        lead = (name if q == 0 else " " * pad) + f" {q} |"
        lines.append(lead + "|".join(f" {grid[(p, q)]:^{w}} " for p, w in zip(cols, widths)) + "|")
    lines.append(" " * (pad + 4) + " ".join(f" {str(p):^{w}} " for p, w in zip(cols, widths)))
    return "\n".join(lines) + "\n"


def page_json(page: SSPage) -> str:
    return json.dumps(page.to_dict(), sort_keys=True)
