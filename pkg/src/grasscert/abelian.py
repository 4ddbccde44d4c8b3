"""Exact integer linear algebra over Z.

Smith normal form with tracked transforms, finitely generated abelian
groups in invariant-factor form, and homomorphisms between them given on
standard generators.  Everything is plain Python ``int``; there is no
floating point anywhere in this module.

>>> smith_normal_form([[2, 4], [6, 8]]).diagonal()
(2, 4)
>>> str(cokernel(PresentedHom(Z, Z, [[2]])))
'Z/2'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Sequence


class AbelianError(ValueError):
    pass


class IllDefinedHom(AbelianError):
    """A matrix that does not respect the torsion of its source."""


class CompositionError(AbelianError):
    pass


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise AbelianError("matrix dimensions do not match entry grid")
        for r in self.entries:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise AbelianError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls(rows, len(columns),
                   tuple(tuple(int(c[i]) for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise AbelianError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.columns()
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                               for r in self.entries))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise AbelianError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise AbelianError("row count mismatch in hstack")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.rows
        if n != self.cols:
            raise AbelianError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        return sum(1 for d in smith_normal_form(self).diagonal() if d != 0)


def as_matrix(m: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular.

    The inverses of the transforms are carried along because lattice
    computations (image bases, membership) need them.
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix = field(repr=False)
    V_inv: IntMatrix = field(repr=False)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form of an integer matrix.

    The pivot is always the entry of smallest nonzero absolute value in the
    active block, ties broken row-major, so the output is a deterministic
    function of the input.  The diagonal is non-negative and each nonzero
    entry divides the next.
    """
    M = as_matrix(m)
    rows, cols = M.rows, M.cols
    a = M.tolist()
    u = IntMatrix.identity(rows).tolist()
    ui = IntMatrix.identity(rows).tolist()
    v = IntMatrix.identity(cols).tolist()
    vi = IntMatrix.identity(cols).tolist()

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in ui:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):  # row_i += c * row_j
        if c == 0:
            return
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        for r in ui:
            r[j] -= c * r[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in ui:
            r[i] = -r[i]

    def swap_cols(i, j):
        if i == j:
            return
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vi[i], vi[j] = vi[j], vi[i]

    def add_col(i, j, c):  # col_i += c * col_j
        if c == 0:
            return
        for r in a:
            r[i] += c * r[j]
        for r in v:
            r[i] += c * r[j]
        vi[j] = [x - c * y for x, y in zip(vi[j], vi[i])]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda e: (e[0], e[1], e[2]))
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    mk = IntMatrix.from_rows
    return SNFResult(mk(u, rows), mk(a, cols), mk(v, cols), mk(ui, rows), mk(vi, cols))


def invariant_factors(m: IntMatrix | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith form."""
    return tuple(d for d in smith_normal_form(m).diagonal() if d != 0)


# ---------------------------------------------------------------------------
# Finitely generated abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FGAbelianGroup:
    """``Z^free_rank + Z/d1 + ... + Z/ds`` with ``d1 | d2 | ... | ds``, all ``di >= 2``.

    Standard generators are ordered free first, then torsion in chain
    order; every matrix in this package is written in those coordinates.
    """
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise AbelianError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise AbelianError(f"torsion coefficient {d} is not >= 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise AbelianError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FGAbelianGroup:
        """Direct sum of cyclic groups of the given orders (0 means Z)."""
        orders = [abs(int(d)) for d in orders]
        free = sum(1 for d in orders if d == 0)
        finite = [d for d in orders if d > 1]
        if not finite:
            return cls(free, ())
        n = len(finite)
        diag = [[finite[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(free, tuple(d for d in invariant_factors(diag) if d > 1))

    @classmethod
    def parse(cls, text: str) -> FGAbelianGroup:
        """Inverse of ``str``: accepts ``0``, ``Z``, ``Z^2 + Z/2`` and ``Z_2`` spellings."""
        text = text.strip()
        if text in ("0", ""):
            return cls()
        orders = []
        for part in re.split(r"\s*\+\s*", text):
            mt = re.fullmatch(r"Z(?:/|_)(\d+)", part)
            mf = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if mt:
                orders.append(int(mt.group(1)))
            elif mf:
                orders.extend([0] * int(mf.group(1) or 1))
            else:
                raise AbelianError(f"cannot parse group {text!r}")
        return cls.from_orders(orders)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def orders(self) -> tuple[int, ...]:
        """Order of each standard generator, 0 for infinite."""
        return (0,) * self.free_rank + self.torsion

    def order(self) -> int | None:
        """Group order, ``None`` when infinite."""
        return None if self.free_rank else prod(self.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def torsion_subgroup(self) -> FGAbelianGroup:
        return FGAbelianGroup(0, self.torsion)

    def relation_columns(self) -> list[tuple[int, ...]]:
        n = self.ngens
        return [tuple(d if i == self.free_rank + k else 0 for i in range(n))
                for k, d in enumerate(self.torsion)]

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates: torsion coordinates taken mod their order."""
        return tuple(x % d if d else x for x, d in zip(v, self.orders()))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def short(self) -> str:
        """Compact tuple-style label such as ``Z_2`` or ``Z^2``."""
        return str(self).replace(" ", "").replace("Z/", "Z_")

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, d: dict) -> FGAbelianGroup:
        return cls(int(d["free_rank"]), tuple(d["torsion"]))


ZERO = FGAbelianGroup()
Z = FGAbelianGroup(1)


def cyclic(n: int) -> FGAbelianGroup:
    """``Z/n``; ``cyclic(0)`` is ``Z``."""
    return FGAbelianGroup.from_orders([n])


def direct_sum(*groups: FGAbelianGroup) -> FGAbelianGroup:
    return FGAbelianGroup.from_orders(o for g in groups for o in g.orders())


def free(n: int) -> FGAbelianGroup:
    return FGAbelianGroup(n)


# ---------------------------------------------------------------------------
# Lattice helpers (sublattices of Z^n given by generating columns)
# ---------------------------------------------------------------------------

def _group_from_snf(snf: SNFResult, ambient: int) -> FGAbelianGroup:
    diag = [d for d in snf.diagonal() if d != 0]
    return FGAbelianGroup.from_orders(diag + [0] * (ambient - len(diag)))


def _kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    snf = smith_normal_form(m)
    return [snf.V.column(j) for j in range(snf.rank, m.cols)]


def _image_basis(gens: Sequence[Sequence[int]], ambient: int) -> list[tuple[int, ...]]:
    if not gens:
        return []
    snf = smith_normal_form(IntMatrix.from_columns(gens, ambient))
    diag = snf.diagonal()
    return [tuple(diag[i] * x for x in snf.U_inv.column(i)) for i in range(snf.rank)]


def _solve(basis: Sequence[Sequence[int]], v: Sequence[int], ambient: int) -> tuple[int, ...] | None:
    """Integer ``y`` with ``sum(y_i * basis_i) == v``, or ``None``."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    snf = smith_normal_form(IntMatrix.from_columns(basis, ambient))
    w = snf.U.apply(v)
    diag = snf.diagonal()
    z = []
    for i, x in enumerate(w):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if x != 0:
                return None
        elif x % d:
            return None
        if i < len(basis):
            z.append(x // d if d else 0)
    z += [0] * (len(basis) - len(z))
    return snf.V.apply(z)


def in_span(gens: Sequence[Sequence[int]], v: Sequence[int], ambient: int) -> bool:
    return _solve(gens, v, ambient) is not None


def _lattice_quotient(big: Sequence[Sequence[int]], small: Sequence[Sequence[int]],
                      ambient: int) -> FGAbelianGroup:
    """``span(big) / span(small)``, assuming ``span(small)`` lies in ``span(big)``."""
    basis = _image_basis(big, ambient)
    if not basis:
        return ZERO
    coords = []
    for s in small:
        y = _solve(basis, s, ambient)
        if y is None:
            raise AbelianError("sublattice is not contained in the lattice")
        coords.append(y)
    if not coords:
        return FGAbelianGroup(len(basis))
    return _group_from_snf(smith_normal_form(IntMatrix.from_columns(coords, len(basis))), len(basis))


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PresentedHom:
    """A homomorphism given by its values on standard generators.

    ``matrix`` has one column per source generator, written in target
    coordinates.  Construction fails if a torsion generator of order ``d``
    is sent to an element whose order does not divide ``d``.
    """
    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntMatrix

    def __init__(self, source: FGAbelianGroup, target: FGAbelianGroup,
                 matrix: IntMatrix | Sequence[Sequence[int]]):
        m = matrix if isinstance(matrix, IntMatrix) else IntMatrix.from_rows(matrix, source.ngens)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", m)
        if (m.rows, m.cols) != (target.ngens, source.ngens):
            raise AbelianError(f"matrix is {m.rows}x{m.cols}, expected {target.ngens}x{source.ngens}")
        t_orders = target.orders()
        for j, d in enumerate(source.orders()):
            if d == 0:
                continue
            for i, x in enumerate(m.column(j)):
                o = t_orders[i]
                if (d * x) % o if o else d * x:
                    raise IllDefinedHom(
                        f"generator {j} has order {d} but its image has coordinate {x} "
                        f"in a summand of order {o or 'infinity'}")

    @classmethod
    def zero(cls, source: FGAbelianGroup, target: FGAbelianGroup) -> PresentedHom:
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def identity(cls, g: FGAbelianGroup) -> PresentedHom:
        return cls(g, g, IntMatrix.identity(g.ngens))

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(self.matrix.apply(v))

    def then(self, g: PresentedHom) -> PresentedHom:
        """Composite ``g o self``."""
        if self.target != g.source:
            raise CompositionError(f"cannot compose through {self.target} and {g.source}")
        return PresentedHom(self.source, g.target, g.matrix @ self.matrix)

    def _with_target_relations(self) -> IntMatrix:
        rel = self.target.relation_columns()
        return self.matrix.hstack(IntMatrix.from_columns(rel, self.target.ngens))

    def kernel_lattice(self) -> list[tuple[int, ...]]:
        """Generators of ``{x in Z^n : f(x) = 0 in target}``."""
        n = self.source.ngens
        return [b[:n] for b in _kernel_basis(self._with_target_relations())]


def cokernel(f: PresentedHom) -> FGAbelianGroup:
    m = f._with_target_relations()
    return _group_from_snf(smith_normal_form(m), f.target.ngens)


def kernel(f: PresentedHom) -> FGAbelianGroup:
    return _lattice_quotient(f.kernel_lattice(), f.source.relation_columns(), f.source.ngens)


def image(f: PresentedHom) -> FGAbelianGroup:
    m = f._with_target_relations()
    return _lattice_quotient(m.columns(), f.target.relation_columns(), f.target.ngens)


def is_injective(f: PresentedHom) -> bool:
    return kernel(f).is_trivial()


def is_surjective(f: PresentedHom) -> bool:
    return cokernel(f).is_trivial()


def is_iso(f: PresentedHom) -> bool:
    return is_injective(f) and is_surjective(f)


def is_exact_at(f: PresentedHom, g: PresentedHom) -> bool:
    """Whether ``image(f) == kernel(g)`` inside the middle group."""
    if f.target != g.source:
        raise CompositionError(f"target of f ({f.target}) is not the source of g ({g.source})")
    mid = f.target
    n = mid.ngens
    rel_b = mid.relation_columns()
    rel_c = g.target.relation_columns()
    # im f inside ker g
    for col in f.matrix.columns():
        if not in_span(rel_c, g.matrix.apply(col), g.target.ngens):
            return False
    # ker g inside im f
    gens = f.matrix.columns() + rel_b
    return all(in_span(gens, x, n) for x in g.kernel_lattice())


def extensions(sub: FGAbelianGroup, quot: FGAbelianGroup) -> list[FGAbelianGroup]:
    """All groups ``H`` admitting ``0 -> sub -> H -> quot -> 0``, sorted by ``str``.

    Extensions of ``Z/c`` by ``A`` are classified by ``A / cA``; each class
    ``alpha`` gives ``H = (A + Z) / <c*g - alpha>``.
    """
    if sub.is_trivial():
        return [quot]
    if quot.is_trivial() or quot.is_free():
        return [direct_sum(sub, quot)]
    a_orders = sub.orders()
    choices = []
    for c in quot.torsion:
        axes = [range(c) if o == 0 else range(gcd(c, o)) for o in a_orders]
        choices.append(list(itertools.product(*axes)))
    n_a = sub.ngens
    n = n_a + quot.ngens
    found = set()
    for alphas in itertools.product(*choices):
        rels = list(_pad(sub.relation_columns(), n))
        for k, (c, alpha) in enumerate(zip(quot.torsion, alphas)):
            col = [0] * n
            col[:n_a] = [-x for x in alpha]
            col[n_a + quot.free_rank + k] = c
            rels.append(tuple(col))
        found.add(_group_from_snf(smith_normal_form(IntMatrix.from_columns(rels, n)), n))
    return sorted(found, key=str)


def _pad(cols: list[tuple[int, ...]], n: int) -> Iterable[tuple[int, ...]]:
    for c in cols:
        yield tuple(c) + (0,) * (n - len(c))
