"""Independent oracles: sympy does the linear algebra, nothing here calls the
package's reduction or Smith form code."""

import itertools

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from grasscert.abelian import FGAbelianGroup
from grasscert.grading import PolynomialExpr


def sympy_invariant_factors(rows):
    if not rows or not rows[0]:
        return ()
    return tuple(int(d) for d in sympy_factors(Matrix(rows), domain=ZZ) if d != 0)


def brute_force_groups(p):
    """H^d from the raw spanning set of the ideal slice, ranked and factored by sympy."""
    gens, degs = p.generators, p.degrees
    rels = [r for r in p.relations if r.is_homogeneous()]
    out = []
    for d in range(p.top_degree + 1):
        monos = [m for m in itertools.product(*[range(d // g + 1) for g in degs])
                 if sum(e * g for e, g in zip(m, degs)) == d]
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for r in rels:
            e = r.degree()
            if e > d:
                continue
            shifts = [m for m in itertools.product(*[range((d - e) // g + 1) for g in degs])
                      if sum(x * g for x, g in zip(m, degs)) == d - e]
            for m in shifts:
                prod_ = PolynomialExpr(gens, {m: 1}) * r
                row = [0] * len(monos)
                for mono, c in prod_.terms.items():
                    row[index[mono]] += c
                if any(row):
                    rows.append(row)
        if not rows:
            out.append(FGAbelianGroup(len(monos)))
            continue
        M = Matrix(rows)
        rank = M.rank()
        tors = [int(f) for f in sympy_factors(M, domain=ZZ) if f not in (0, 1)]
        out.append(FGAbelianGroup(len(monos) - rank, tuple(tors)))
    return out
