"""Homotopy groups through the long exact sequence of a fibration.

Only two inferences are made, each where a five-term window of the
sequence is flanked by zeros.  Anything else stays Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import ZERO, FGAbelianGroup, PresentedHom
from .spaces import CP, SpaceId, Sphere, grassmannian, stiefel


class HomotopyError(ValueError):
    pass


@dataclass(frozen=True)
class PiEntry:
    """``group`` is ``None`` for Unknown; ``note`` carries annotations."""
    group: FGAbelianGroup | None = None
    note: str = ""

    @property
    def known(self) -> bool:
        return self.group is not None

    def is_zero(self) -> bool:
        return self.known and self.group.is_trivial()

    def __str__(self):
        return self.group.short() if self.known else "?"

    def to_dict(self) -> dict:
        return {"group": None if self.group is None else str(self.group), "note": self.note}


UNKNOWN = PiEntry()


def known(g: FGAbelianGroup) -> PiEntry:
    return PiEntry(g)


@dataclass(frozen=True)
class PiTable:
    entries: tuple[PiEntry, ...]
    nonabelian_pi1: bool = False

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.nonabelian_pi1:
            raise HomotopyError("nonabelian fundamental groups are not supported")

    @classmethod
    def from_groups(cls, groups) -> PiTable:
        return cls(tuple(UNKNOWN if g is None else known(g) for g in groups))

    def __getitem__(self, k: int) -> PiEntry:
        return self.entries[k]

    def __len__(self):
        return len(self.entries)

    @property
    def max_level(self) -> int:
        return len(self.entries) - 1

    def truncated(self, max_level: int) -> PiTable:
        return PiTable(self.entries[:max_level + 1])

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"

    def to_list(self) -> list:
        return [None if e.group is None else str(e.group) for e in self.entries]


@dataclass(frozen=True)
class FibrationSpec:
    fiber: SpaceId
    total: SpaceId
    base: SpaceId
    name: str


def hopf(n: int) -> FibrationSpec:
    """S^1 -> S^(2n+1) -> CP_n."""
    return FibrationSpec(Sphere(1), Sphere(2 * n + 1), CP(n), f"Hopf({n})")


def grass_fibration(n: int) -> FibrationSpec:
    """S^1 -> V2R^n -> G2+R^n, a frame going to the oriented plane it spans."""
    return FibrationSpec(Sphere(1), stiefel(n), grassmannian(n), f"GrassFib({n})")


def les_base(fiber: PiTable, total: PiTable, max_level: int) -> PiTable:
    """Base homotopy groups forced by ``pi_k F -> pi_k E -> pi_k B -> pi_(k-1) F -> pi_(k-1) E``.

    (i) both fiber terms zero: ``pi_k B = pi_k E``;
    (ii) both total-space terms zero: ``pi_k B = pi_(k-1) F``.
    The base is assumed connected, so level 0 is trivial.
    """
    if len(fiber) <= max_level or len(total) <= max_level:
        raise HomotopyError(f"tables must cover levels 0..{max_level}")
    out = [known(ZERO)]
    for k in range(1, max_level + 1):
        entry = UNKNOWN
        if fiber[k].is_zero() and fiber[k - 1].is_zero() and total[k].known:
            entry = known(total[k].group)
        elif total[k].is_zero() and total[k - 1].is_zero() and fiber[k - 1].known:
            entry = known(fiber[k - 1].group)
        out.append(entry)
    return PiTable(tuple(out))


def sphere_table(n: int, max_level: int) -> PiTable:
    """Connectivity only: 0 below n, Z at n; the circle is also 0 above 1."""
    out = []
    for j in range(max_level + 1):
        if j < n:
            out.append(known(ZERO))
        elif j == n:
            out.append(known(FGAbelianGroup(1)))
        elif n == 1:
            out.append(known(ZERO))
        else:
            out.append(UNKNOWN)
    return PiTable(tuple(out))


def cp_from_sphere(n: int, max_level: int) -> PiTable:
    """pi_j CP_n: 0 for j < 2, Z at 2, and pi_j S^(2n+1) above."""
    if n < 1:
        raise HomotopyError("CP_n needs n >= 1")
    out = []
    for j in range(max_level + 1):
        if j < 2:
            out.append(known(ZERO))
        elif j == 2:
            out.append(known(FGAbelianGroup(1)))
        elif j < 2 * n + 1:
            out.append(PiEntry(ZERO, f"pi_{j} S^{2 * n + 1}"))
        elif j == 2 * n + 1:
            out.append(PiEntry(FGAbelianGroup(1), f"pi_{j} S^{2 * n + 1}"))
        else:
            out.append(PiEntry(None, f"equals pi_{j} S^{2 * n + 1}"))
    return PiTable(tuple(out))


def first_difference(a: PiTable, b: PiTable) -> int | None:
    """Smallest level where both tables are Known and disagree."""
    for k, (x, y) in enumerate(zip(a.entries, b.entries)):
        if x.known and y.known and x.group != y.group:
            return k
    return None


def forced_segment(fiber: PiTable, total: PiTable, base: PiTable, k: int) -> list[PresentedHom] | None:
    """The four-term window of the sequence that a deduction rule pins down at level ``k``.

    Rule (i) gives ``pi_k F -> pi_k E -> pi_k B -> pi_(k-1) F`` and rule (ii)
    gives ``pi_k E -> pi_k B -> pi_(k-1) F -> pi_(k-1) E``.  The outer terms
    are zero, the middle map is the identity the rule asserts, so exactness
    holds at both interior terms.  ``None`` when no rule applies.
    """
    if not base[k].known:
        return None
    B = base[k].group
    if fiber[k].is_zero() and fiber[k - 1].is_zero() and total[k].group == B:
        groups = [ZERO, B, B, ZERO]
    elif total[k].is_zero() and total[k - 1].is_zero() and fiber[k - 1].group == B:
        groups = [ZERO, B, B, ZERO]
    else:
        return None
    return [PresentedHom.zero(groups[0], groups[1]), PresentedHom.identity(B),
            PresentedHom.zero(groups[2], groups[3])]
