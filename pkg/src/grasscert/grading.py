"""Finite graded-commutative rings over Z from generators and relations.

A ring is computed one degree at a time: the degree-d group is the free
abelian group on degree-d monomials modulo every product
``monomial * relation`` that lands in degree d.  Nothing above
``top_degree`` is computed; such classes are zero by convention.
"""

from __future__ import annotations

import ast
import itertools
import json
import re
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .abelian import FGAbelianGroup, IntMatrix, smith_normal_form


class GradingError(ValueError):
    pass


class InhomogeneousError(GradingError):
    pass


class DegreeOverflow(GradingError):
    pass


class RingMismatch(GradingError):
    pass


Monomial = tuple  # exponent vector, one entry per generator


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", self.name):
            raise GradingError(f"bad generator name {self.name!r}")
        if self.degree < 1:
            raise GradingError(f"generator {self.name} has degree {self.degree} < 1")


def monomial_degree(m: Monomial, degrees: Sequence[int]) -> int:
    return sum(e * d for e, d in zip(m, degrees))


def koszul_sign(m1: Monomial, m2: Monomial, degrees: Sequence[int]) -> int:
    """Sign from moving the factors of ``m2`` left past those of ``m1``."""
    odd = [i for i, d in enumerate(degrees) if d % 2]
    s = 0
    for j in odd:
        if m2[j]:
            s += m2[j] * sum(m1[i] for i in odd if i > j)
    return -1 if s % 2 else 1


class PolynomialExpr:
    """Integer combination of monomials in a fixed list of generators."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Sequence[GeneratorSpec], terms: Mapping[Monomial, int] | None = None):
        self.gens = tuple(gens)
        self.terms = {tuple(m): int(c) for m, c in (terms or {}).items() if c}

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.gens)

    @classmethod
    def constant(cls, gens, c: int) -> PolynomialExpr:
        return cls(gens, {(0,) * len(gens): c})

    @classmethod
    def generator(cls, gens, name: str) -> PolynomialExpr:
        names = [g.name for g in gens]
        if name not in names:
            raise GradingError(f"unknown generator {name!r}")
        i = names.index(name)
        return cls(gens, {tuple(int(j == i) for j in range(len(gens))): 1})

    def _coerce(self, other) -> PolynomialExpr:
        if isinstance(other, int):
            return PolynomialExpr.constant(self.gens, other)
        if isinstance(other, PolynomialExpr):
            if other.gens != self.gens:
                raise GradingError("polynomials over different generator lists")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return PolynomialExpr(self.gens, terms)

    __radd__ = __add__

    def __neg__(self):
        return PolynomialExpr(self.gens, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        degrees = self.degrees
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + koszul_sign(m1, m2, degrees) * c1 * c2
        return PolynomialExpr(self.gens, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return PolynomialExpr(self.gens, {m: other * c for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise GradingError("negative power")
        out = PolynomialExpr.constant(self.gens, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolynomialExpr.constant(self.gens, other)
        if not isinstance(other, PolynomialExpr):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_set(self) -> set[int]:
        return {monomial_degree(m, self.degrees) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degree_set()) <= 1

    def degree(self) -> int:
        ds = self.degree_set()
        if len(ds) != 1:
            raise InhomogeneousError(f"{self} has degrees {sorted(ds)}")
        return ds.pop()

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: (-monomial_degree(t[0], self.degrees),
                                                         tuple(-e for e in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = "*".join(g.name + (f"^{e}" if e > 1 else "")
                            for g, e in zip(self.gens, m) if e)
            a = abs(c)
            body = mono if a == 1 and mono else (f"{a}*{mono}" if mono else str(a))
            if k == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"PolynomialExpr({self})"


def parse_polynomial(text: str, gens: Sequence[GeneratorSpec]) -> PolynomialExpr:
    """Parse ``2*x2^3 - x6`` style text; ``^`` is a power, ``*`` is required."""
    gens = tuple(gens)
    names = {g.name for g in gens}
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise GradingError(f"cannot parse polynomial {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return PolynomialExpr.constant(gens, node.value)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise GradingError(f"unknown generator {node.id!r} in {text!r}")
            return PolynomialExpr.generator(gens, node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)
                        and node.right.value >= 0):
                    raise GradingError(f"exponents must be non-negative integers in {text!r}")
                return ev(node.left) ** node.right.value
            ops = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
                   ast.Mult: lambda a, b: a * b}
            for op, fn in ops.items():
                if isinstance(node.op, op):
                    return fn(ev(node.left), ev(node.right))
        raise GradingError(f"unsupported syntax in polynomial {text!r}")

    return ev(tree.body)


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[GeneratorSpec, ...]
    relations: tuple[PolynomialExpr, ...]
    top_degree: int
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise GradingError(f"duplicate generator names in {names}")
        if self.top_degree < 0:
            raise GradingError("top_degree must be non-negative")
        for r in self.relations:
            if r.gens != self.generators:
                raise GradingError(f"relation {r} is over a different generator list")

    @classmethod
    def build(cls, generators: Iterable[tuple[str, int]], relations: Iterable[str],
              top_degree: int, name: str = "") -> RingPresentation:
        gens = tuple(GeneratorSpec(n, d) for n, d in generators)
        return cls(gens, tuple(parse_polynomial(r, gens) for r in relations), top_degree, name)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def poly(self, text: str) -> PolynomialExpr:
        return parse_polynomial(text, self.generators)

    def with_top(self, top: int) -> RingPresentation:
        return RingPresentation(self.generators, self.relations, top, self.name)

    def to_text(self) -> str:
        lines = [f"gen {g.name} {g.degree}" for g in self.generators]
        lines += [f"rel {r}" for r in self.relations]
        lines.append(f"top {self.top_degree}")
        return "\n".join(lines) + "\n"


def parse_presentation(text: str, name: str = "") -> RingPresentation:
    """Read the line format ``gen <name> <degree>`` / ``rel <poly>`` / ``top <d>``.

    Blank lines and ``#`` comments are ignored.
    """
    gens, rels, top = [], [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "gen":
            parts = rest.split()
            if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                raise GradingError(f"line {lineno}: expected 'gen <name> <degree>'")
            gens.append((parts[0], int(parts[1])))
        elif key == "rel":
            rels.append(rest)
        elif key == "top":
            if not rest.isdigit():
                raise GradingError(f"line {lineno}: expected 'top <degree>'")
            top = int(rest)
        else:
            raise GradingError(f"line {lineno}: unknown directive {key!r}")
    if top is None:
        raise GradingError("presentation has no 'top' line")
    return RingPresentation.build(gens, rels, top, name)


@dataclass(frozen=True)
class Violation:
    index: int
    relation: PolynomialExpr
    degrees: frozenset[int]

    def __str__(self):
        return f"relation {self.index} ({self.relation}) mixes degrees {sorted(self.degrees)}"


def validate_homogeneous(p: RingPresentation) -> list[Violation]:
    """One entry per relation whose monomials do not share a single degree."""
    return [Violation(i, r, frozenset(r.degree_set()))
            for i, r in enumerate(p.relations) if not r.is_homogeneous()]


def lint_odd_squares(p: RingPresentation) -> list[str]:
    """Odd-degree generators whose square is not killed by a stated relation."""
    out = []
    for i, g in enumerate(p.generators):
        if g.degree % 2 == 0:
            continue
        sq = tuple(2 if j == i else 0 for j in range(len(p.generators)))
        if not any(set(r.terms) == {sq} for r in p.relations):
            out.append(f"odd generator {g.name} has no relation on {g.name}^2; "
                       f"graded commutativity only gives 2*{g.name}^2 = 0")
    return out


def monomials_of_degree(degrees: Sequence[int], d: int, limit: int | None = None) -> list[Monomial]:
    """All exponent vectors of total degree ``d``, in descending lexicographic order."""
    n = len(degrees)
    out: list[Monomial] = []

    def rec(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
                if limit is not None and len(out) > limit:
                    raise DegreeOverflow(f"more than {limit} monomials in degree {d}")
            return
        for e in range(remaining // degrees[i], -1, -1):
            prefix.append(e)
            rec(i + 1, remaining - e * degrees[i], prefix)
            prefix.pop()

    rec(0, d, [])
    return out


def ideal_slice(p: RingPresentation, d: int, relations: Sequence[PolynomialExpr] | None = None,
                limit: int | None = None) -> list[PolynomialExpr]:
    """Every nonzero ``monomial * relation`` of degree ``d``."""
    gens = p.generators
    out = []
    for r in (p.relations if relations is None else relations):
        e = r.degree()
        if e > d:
            continue
        for m in monomials_of_degree(p.degrees, d - e, limit):
            prod_ = PolynomialExpr(gens, {m: 1}) * r
            if not prod_.is_zero():
                out.append(prod_)
    return out


# ---------------------------------------------------------------------------
# Computed rings
# ---------------------------------------------------------------------------

@dataclass
class _Degree:
    degree: int
    monomials: list[Monomial]
    group: FGAbelianGroup
    rewrite: dict[Monomial, dict[Monomial, int]]   # pivoted monomial -> combination of free monomials
    free_monomials: list[Monomial]
    U: IntMatrix                                    # free-monomial coordinates -> SNF coordinates
    slots: list[tuple[int, int]]                    # output coordinate -> (SNF index, order or 0)
    basis: list[dict[Monomial, int]]


def _reduce_degree(d: int, monos: list[Monomial], rows: list[dict[Monomial, int]]) -> _Degree:
    rows = [dict(r) for r in rows if r]
    pivots: dict[Monomial, dict[Monomial, int]] = {}
    changed = True
    while changed:
        changed = False
        for m in monos:
            if m in pivots:
                continue
            r = next((r for r in rows if abs(r.get(m, 0)) == 1), None)
            if r is None:
                continue
            rows.remove(r)
            if r[m] == -1:
                r = {k: -v for k, v in r.items()}
            for other in itertools.chain(rows, pivots.values()):
                c = other.get(m)
                if c:
                    for k, v in r.items():
                        nv = other.get(k, 0) - c * v
                        if nv:
                            other[k] = nv
                        else:
                            other.pop(k, None)
            pivots[m] = r
            rows = [x for x in rows if x]
            changed = True
    free_monos = [m for m in monos if m not in pivots]
    pos = {m: i for i, m in enumerate(free_monos)}
    nf = len(free_monos)
    unique_rows = []
    seen = set()
    for r in rows:
        key = tuple(sorted(r.items()))
        if key not in seen:
            seen.add(key)
            unique_rows.append(r)
    if unique_rows:
        cols = []
        for r in unique_rows:
            col = [0] * nf
            for m, c in r.items():
                col[pos[m]] = c
            cols.append(col)
        snf = smith_normal_form(IntMatrix.from_columns(cols, nf))
        U, U_inv, diag = snf.U, snf.U_inv, snf.diagonal()
    else:
        U = U_inv = IntMatrix.identity(nf)
        diag = ()
    rank = sum(1 for x in diag if x)
    slots = [(i, 0) for i in range(rank, nf)]
    slots += [(i, diag[i]) for i in range(rank) if diag[i] > 1]
    group = FGAbelianGroup(nf - rank, tuple(o for _, o in slots if o))
    basis = [{free_monos[k]: x for k, x in enumerate(U_inv.column(i)) if x} for i, _ in slots]
    rewrite = {m: {k: -v for k, v in r.items() if k != m} for m, r in pivots.items()}
    return _Degree(d, monos, group, rewrite, free_monos, U, slots, basis)


@dataclass(frozen=True, eq=False)
class RingElement:
    """A class of fixed degree, as coordinates in that degree's chosen basis."""
    degree: int
    coords: tuple[int, ...]
    ring: "GradedRing" = field(repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.degree == other.degree and self.coords == other.coords

    def __hash__(self):
        return hash((self.degree, self.coords))

    def _check(self, other: RingElement):
        if not isinstance(other, RingElement) or other.ring is not self.ring:
            raise RingMismatch("elements belong to different rings")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        if other.degree != self.degree:
            raise GradingError("adding elements of different degrees")
        return self.ring._make(self.degree, [a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> RingElement:
        return self.ring._make(self.degree, [-a for a in self.coords])

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __rmul__(self, n: int) -> RingElement:
        if not isinstance(n, int):
            return NotImplemented
        return self.ring._make(self.degree, [n * a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return cup(self.ring, self, other)

    def __pow__(self, n: int) -> RingElement:
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __str__(self):
        labels = self.ring.basis_labels(self.degree)
        parts = []
        for c, lab in zip(self.coords, labels):
            if c:
                parts.append(lab if c == 1 else f"-({lab})" if c == -1 else f"{c}*({lab})")
        return " + ".join(parts) or "0"


class GradedRing:
    """Result of :func:`compute`.  Immutable once built."""

    def __init__(self, presentation: RingPresentation, degrees: list[_Degree]):
        self.presentation = presentation
        self.top_degree = presentation.top_degree
        self._degrees = degrees
        self._reduce_cache: dict[Monomial, tuple[int, ...]] = {}
        self._table: dict[tuple[int, int, int, int], tuple[int, ...]] = {}

    # -- groups and bases ---------------------------------------------------

    @property
    def gens(self) -> tuple[GeneratorSpec, ...]:
        return self.presentation.generators

    def group(self, d: int) -> FGAbelianGroup:
        if d < 0 or d > self.top_degree:
            return FGAbelianGroup()
        return self._degrees[d].group

    def groups(self) -> list[FGAbelianGroup]:
        return [dd.group for dd in self._degrees]

    def basis(self, d: int) -> list[PolynomialExpr]:
        """Polynomial representatives of the basis classes in degree ``d``."""
        if d < 0 or d > self.top_degree:
            return []
        return [PolynomialExpr(self.gens, b) for b in self._degrees[d].basis]

    def basis_labels(self, d: int) -> list[str]:
        return [str(b) for b in self.basis(d)]

    def basis_element(self, d: int, i: int) -> RingElement:
        n = self.group(d).ngens
        return RingElement(d, tuple(int(j == i) for j in range(n)), self)

    @cached_property
    def dimension(self) -> int:
        """Highest degree with a nonzero group."""
        return max((d for d in range(self.top_degree + 1) if not self.group(d).is_trivial()), default=0)

    def ideal_rank(self, d: int) -> int:
        return len(self._degrees[d].monomials) - self.group(d).free_rank

    # -- elements -----------------------------------------------------------

    def _make(self, d: int, coords: Sequence[int]) -> RingElement:
        return RingElement(d, self.group(d).reduce(coords), self)

    def zero(self, d: int) -> RingElement:
        return RingElement(d, (0,) * self.group(d).ngens, self)

    def one(self) -> RingElement:
        return self.normal_form(PolynomialExpr.constant(self.gens, 1))

    def gen(self, name: str) -> RingElement:
        return self.normal_form(PolynomialExpr.generator(self.gens, name))

    def element(self, text: str) -> RingElement:
        return self.normal_form(parse_polynomial(text, self.gens))

    def _reduce_monomial(self, m: Monomial) -> tuple[int, ...]:
        hit = self._reduce_cache.get(m)
        if hit is not None:
            return hit
        d = monomial_degree(m, self.presentation.degrees)
        dd = self._degrees[d]
        vec = dd.rewrite.get(m, {m: 1})
        pos = {f: i for i, f in enumerate(dd.free_monomials)}
        w = [0] * len(dd.free_monomials)
        for f, c in vec.items():
            w[pos[f]] += c
        y = dd.U.apply(w) if w else ()
        out = dd.group.reduce([y[i] for i, _ in dd.slots])
        self._reduce_cache[m] = out
        return out

    def normal_form(self, e: PolynomialExpr, degree: int | None = None) -> RingElement:
        """Coordinates of the class of ``e``.  Classes above ``top_degree`` are zero."""
        if e.gens != self.gens:
            raise RingMismatch("polynomial is over another generator list")
        if e.is_zero():
            if degree is None:
                raise GradingError("the zero polynomial needs an explicit degree")
            return self.zero(degree)
        d = e.degree()
        if d > self.top_degree:
            return RingElement(d, (), self)
        acc = [0] * self.group(d).ngens
        for m, c in e.terms.items():
            for i, x in enumerate(self._reduce_monomial(m)):
                acc[i] += c * x
        return self._make(d, acc)

    # -- products -----------------------------------------------------------

    def _basis_product(self, p: int, i: int, q: int, j: int) -> tuple[int, ...]:
        key = (p, i, q, j)
        hit = self._table.get(key)
        if hit is None:
            prod_ = self.basis(p)[i] * self.basis(q)[j]
            hit = self.normal_form(prod_, degree=p + q).coords
            self._table[key] = hit
        return hit

    def multiplication_table(self) -> dict[tuple[int, int, int, int], tuple[int, ...]]:
        """Products of all basis pairs with total degree within bound."""
        for p in range(self.top_degree + 1):
            for q in range(self.top_degree + 1 - p):
                for i in range(self.group(p).ngens):
                    for j in range(self.group(q).ngens):
                        self._basis_product(p, i, q, j)
        return dict(sorted(self._table.items()))

    # -- summaries ----------------------------------------------------------

    def poincare_series(self) -> list[int]:
        return poincare_series(self)

    def torsion_profile(self) -> list[FGAbelianGroup]:
        return torsion_profile(self)

    def top_class(self) -> RingElement:
        g = self.group(self.dimension)
        if g != FGAbelianGroup(1):
            raise GradingError(f"top group {g} is not infinite cyclic")
        return self.basis_element(self.dimension, 0)

    def to_dict(self) -> dict:
        table = self.multiplication_table()
        return {
            "name": self.presentation.name,
            "generators": [{"name": g.name, "degree": g.degree} for g in self.gens],
            "relations": [str(r) for r in self.presentation.relations],
            "top_degree": self.top_degree,
            "degrees": [{"degree": d, "group": str(self.group(d)),
                         "structure": self.group(d).to_dict(),
                         "basis": self.basis_labels(d)}
                        for d in range(self.top_degree + 1)],
            "products": [{"left": [p, i], "right": [q, j], "coords": list(v)}
                         for (p, i, q, j), v in table.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def __repr__(self):
        return f"<GradedRing {self.presentation.name or ''} top={self.top_degree}>"


def compute(p: RingPresentation, inhomogeneous: str = "error",
            max_monomials: int = 20000) -> GradedRing:
    """Degreewise quotient of the free graded-commutative ring by the relations.

    ``inhomogeneous`` controls relations that mix degrees: ``"error"``
    (default) refuses, ``"drop"`` leaves them out of the ideal.
    """
    bad = validate_homogeneous(p)
    if bad:
        if inhomogeneous == "error":
            raise InhomogeneousError("; ".join(str(v) for v in bad))
        if inhomogeneous != "drop":
            raise GradingError(f"unknown inhomogeneous mode {inhomogeneous!r}")
    for msg in lint_odd_squares(p):
        warnings.warn(msg, stacklevel=2)
    skip = {v.index for v in bad}
    rels = [r for i, r in enumerate(p.relations) if i not in skip and not r.is_zero()]
    # a*a = -a*a for odd a, so 2a^2 lies in the ideal of graded commutativity
    for i, g in enumerate(p.generators):
        if g.degree % 2:
            sq = tuple(2 if j == i else 0 for j in range(len(p.generators)))
            rels.append(PolynomialExpr(p.generators, {sq: 2}))
    degrees = []
    for d in range(p.top_degree + 1):
        monos = monomials_of_degree(p.degrees, d, max_monomials)
        rows = [e.terms for e in ideal_slice(p, d, rels, max_monomials)]
        degrees.append(_reduce_degree(d, monos, rows))
    return GradedRing(p, degrees)


def cup(r: GradedRing, a: RingElement, b: RingElement) -> RingElement:
    if a.ring is not r or b.ring is not r:
        raise RingMismatch("elements belong to different rings")
    d = a.degree + b.degree
    if d > r.top_degree:
        return RingElement(d, (), r)
    acc = [0] * r.group(d).ngens
    for i, x in enumerate(a.coords):
        if not x:
            continue
        for j, y in enumerate(b.coords):
            if not y:
                continue
            for k, z in enumerate(r._basis_product(a.degree, i, b.degree, j)):
                acc[k] += x * y * z
    return r._make(d, acc)


def normal_form(r: GradedRing, e: PolynomialExpr) -> RingElement:
    return r.normal_form(e)


def poincare_series(r: GradedRing) -> list[int]:
    return [r.group(d).free_rank for d in range(r.top_degree + 1)]


def torsion_profile(r: GradedRing) -> list[FGAbelianGroup]:
    return [r.group(d).torsion_subgroup() for d in range(r.top_degree + 1)]


def integrate(r: GradedRing, a: RingElement, orientation: RingElement) -> int:
    """Coefficient of a top-degree class on the chosen orientation generator."""
    if a.ring is not r or orientation.ring is not r:
        raise RingMismatch("elements belong to different rings")
    top = r.dimension
    if r.group(top) != FGAbelianGroup(1):
        raise GradingError(f"top group {r.group(top)} is not infinite cyclic")
    if a.degree != top or orientation.degree != top:
        raise GradingError(f"integration needs degree {top}, got {a.degree}")
    if abs(orientation.coords[0]) != 1:
        raise GradingError("orientation does not generate the top group")
    return a.coords[0] * orientation.coords[0]


def truncation_violations(p: RingPresentation, dimension: int) -> list[int]:
    """Degrees above ``dimension`` where monomials fail to vanish.

    Checking the window up to ``dimension + max generator degree`` suffices:
    any longer monomial has a factor whose degree falls in that window.
    """
    hi = dimension + max(p.degrees, default=0)
    ring = compute(p.with_top(hi))
    return [d for d in range(dimension + 1, hi + 1) if not ring.group(d).is_trivial()]
