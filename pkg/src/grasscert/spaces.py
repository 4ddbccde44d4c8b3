"""Identifiers for the spaces the engine knows, and their text grammar.

Grammar: ``cp:<n>``, ``g2+:<n>``, ``v2:<n>``, ``s:<n>``, ``s2xs2``, with an
optional ``@verbatim`` / ``@amended`` / ``@corrected`` suffix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

VARIANTS = ("verbatim", "amended", "corrected")
DEFAULT_VARIANT = "corrected"

_BOUNDS = {"CP": 1, "GrassOdd": 2, "GrassEven": 2, "StiefelOdd": 2, "StiefelEven": 2,
           "Sphere": 1, "S2xS2": 0}


class SpaceSpecError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SpaceId:
    """``GrassOdd(k)`` is G2+R^(2k+1), ``GrassEven(k)`` is G2+R^(2k); Stiefel likewise."""
    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in _BOUNDS:
            raise SpaceSpecError(f"unknown space kind {self.kind!r}")
        if self.kind == "S2xS2":
            if self.n != 0:
                raise SpaceSpecError("S2xS2 takes no parameter")
        elif self.n < _BOUNDS[self.kind]:
            raise SpaceSpecError(f"{self.kind} needs parameter >= {_BOUNDS[self.kind]}, got {self.n}")

    @property
    def k(self) -> int:
        return self.n

    @property
    def ambient(self) -> int | None:
        """The ``n`` of G2+R^n or V2R^n."""
        if self.kind in ("GrassOdd", "StiefelOdd"):
            return 2 * self.n + 1
        if self.kind in ("GrassEven", "StiefelEven"):
            return 2 * self.n
        return None

    @property
    def dimension(self) -> int:
        k = self.n
        return {"CP": 2 * k, "GrassOdd": 4 * k - 2, "GrassEven": 4 * k - 4,
                "StiefelOdd": 4 * k - 1, "StiefelEven": 4 * k - 3,
                "Sphere": k, "S2xS2": 4}[self.kind]

    @property
    def simply_connected(self) -> bool:
        return not (self.kind == "Sphere" and self.n == 1)

    @property
    def label(self) -> str:
        n = self.n
        return {"CP": f"CP_{n}", "GrassOdd": f"G2+R^{2 * n + 1}", "GrassEven": f"G2+R^{2 * n}",
                "StiefelOdd": f"V2R^{2 * n + 1}", "StiefelEven": f"V2R^{2 * n}",
                "Sphere": f"S^{n}", "S2xS2": "S2xS2"}[self.kind]

    @property
    def spec(self) -> str:
        if self.kind == "CP":
            return f"cp:{self.n}"
        if self.kind.startswith("Grass"):
            return f"g2+:{self.ambient}"
        if self.kind.startswith("Stiefel"):
            return f"v2:{self.ambient}"
        if self.kind == "Sphere":
            return f"s:{self.n}"
        return "s2xs2"

    def __str__(self):
        return self.label


def CP(n: int) -> SpaceId:
    return SpaceId("CP", n)


def GrassOdd(k: int) -> SpaceId:
    return SpaceId("GrassOdd", k)


def GrassEven(k: int) -> SpaceId:
    return SpaceId("GrassEven", k)


def StiefelOdd(k: int) -> SpaceId:
    return SpaceId("StiefelOdd", k)


def StiefelEven(k: int) -> SpaceId:
    return SpaceId("StiefelEven", k)


def Sphere(n: int) -> SpaceId:
    return SpaceId("Sphere", n)


S2xS2 = SpaceId("S2xS2")


def grassmannian(n: int) -> SpaceId:
    """G2+R^n for n >= 4."""
    if n < 4:
        raise SpaceSpecError(f"G2+R^{n}: need n >= 4 (n = 3 is the 2-sphere, use s:2 or cp:1)")
    return GrassOdd((n - 1) // 2) if n % 2 else GrassEven(n // 2)


def stiefel(n: int) -> SpaceId:
    """V2R^n for n >= 4."""
    if n < 4:
        raise SpaceSpecError(f"V2R^{n}: need n >= 4")
    return StiefelOdd((n - 1) // 2) if n % 2 else StiefelEven(n // 2)


def parse_space(text: str, default_variant: str = DEFAULT_VARIANT) -> tuple[SpaceId, str]:
    """Parse a space spec such as ``g2+:8@verbatim`` into ``(SpaceId, variant)``."""
    body, _, variant = text.strip().partition("@")
    variant = variant or default_variant
    if variant not in VARIANTS:
        raise SpaceSpecError(f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}")
    body = body.lower()
    if body == "s2xs2":
        return S2xS2, variant
    m = re.fullmatch(r"(cp|g2\+|v2|s):(\d+)", body)
    if not m:
        raise SpaceSpecError(f"malformed space spec {text!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "cp":
        return CP(n), variant
    if kind == "g2+":
        return grassmannian(n), variant
    if kind == "v2":
        return stiefel(n), variant
    return Sphere(n), variant
