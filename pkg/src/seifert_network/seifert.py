"""Seifert fibered spaces over S^2 and RP^2 given by unnormalized invariants.

A space ``S2(q_1, ..., q_k)`` is stored as its base and the tuple of
coefficients ``q_i``.  An oo coefficient is a degenerate (index 0) fiber.
The index of a fiber is the denominator of its coefficient.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .rational import ExtendedRational, RationalLike, as_rational, sorted_rationals

__all__ = [
    "BaseSurface",
    "SeifertInvariants",
    "SfsKind",
    "SfsClassification",
    "DegenerateSpaceError",
    "montesinos_to_sfs",
    "normalize",
    "negate",
    "is_homeomorphic",
    "recognize",
    "lens_parameters",
    "normalize_lens",
    "lens_equivalent",
]


class DegenerateSpaceError(ValueError):
    """Raised when an operation needs a fibration without index-0 fibers."""


class BaseSurface(enum.Enum):
    SPHERE = "S2"
    PROJECTIVE_PLANE = "RP2"


@dataclass(frozen=True)
class SeifertInvariants:
    base: BaseSurface
    coefficients: tuple[ExtendedRational, ...]

    def __init__(self, base: BaseSurface, coefficients: Iterable[RationalLike]):
        object.__setattr__(self, "base", BaseSurface(base))
        object.__setattr__(self, "coefficients", tuple(as_rational(c) for c in coefficients))

    @property
    def degenerate(self) -> bool:
        return any(c.is_infinite() for c in self.coefficients)

    def exceptional_fibers(self) -> list[ExtendedRational]:
        """Coefficients of fibers with index other than 1."""
        return [c for c in self.coefficients if c.denominator != 1]

    def indices(self) -> list[int]:
        return [c.denominator for c in self.coefficients]

    def multiset(self) -> Counter:
        return Counter(self.coefficients)

    def same_multiset(self, other: "SeifertInvariants") -> bool:
        return self.base == other.base and self.multiset() == other.multiset()

    def to_json(self) -> dict:
        return {"base": self.base.value, "coeffs": [c.to_json() for c in self.coefficients]}

    @classmethod
    def from_json(cls, doc: dict) -> "SeifertInvariants":
        return cls(BaseSurface(doc["base"]), [ExtendedRational.parse(c) for c in doc["coeffs"]])

    def __str__(self):
        return f"{self.base.value}({', '.join(str(c) for c in self.coefficients)})"


class SfsKind(enum.Enum):
    LENS_SPACE = "LensSpace"
    CONNECTED_SUM = "ConnectedSumOfLensSpaces"
    SEIFERT_OVER_S2 = "SeifertOverS2"
    SEIFERT_OVER_RP2 = "SeifertOverRP2"


@dataclass(frozen=True)
class SfsClassification:
    kind: SfsKind
    lens: tuple[tuple[int, int], ...] = ()
    invariants: SeifertInvariants | None = field(default=None)

    def __post_init__(self):
        if self.kind is SfsKind.LENS_SPACE and len(self.lens) != 1:
            raise ValueError("a lens space carries exactly one (p, q) pair")
        if self.kind is SfsKind.CONNECTED_SUM and len(self.lens) < 2:
            raise ValueError("a connected sum carries at least two summands")

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind.value}
        if self.lens:
            doc["lens"] = [list(pq) for pq in self.lens]
        if self.invariants is not None:
            doc["space"] = self.invariants.to_json()
        return doc


def montesinos_to_sfs(base: BaseSurface, ratios: Sequence[RationalLike]) -> SeifertInvariants:
    """Two-fold branched cover of M(r_1, ..., r_k) (or Mm(...) over RP^2).

    Each rational tangle R(r_i) contributes the coefficient ``-1/r_i``;
    ``r_i = 0`` gives a degenerate fiber.
    """
    return SeifertInvariants(base, [-as_rational(r).reciprocal() for r in ratios])


def _require_nondegenerate(si: SeifertInvariants):
    if si.degenerate:
        raise DegenerateSpaceError(f"{si} has an index-0 fiber")


def normalize(si: SeifertInvariants) -> SeifertInvariants:
    """Canonical form ``(b; f_1 <= ... <= f_r)`` with ``0 < f_i < 1``.

    The integer entry ``b`` (the sum of the integer parts) always comes
    first.  The same moves are used over RP^2, where the comparison they
    induce is sound but possibly incomplete.
    """
    _require_nondegenerate(si)
    b = 0
    fracs = []
    for c in si.coefficients:
        b += c.floor()
        f = c.fractional_part()
        if f.numerator != 0:
            fracs.append(f)
    return SeifertInvariants(si.base, [ExtendedRational(b)] + sorted_rationals(fracs))


def negate(si: SeifertInvariants) -> SeifertInvariants:
    """Orientation reversal."""
    return SeifertInvariants(si.base, [-c for c in si.coefficients])


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def normalize_lens(p: int, q: int) -> tuple[int, int]:
    """Representative of L(p, q) with ``p >= 0`` and ``0 <= q < p``.

    Uses L(p, q) = L(-p, -q); L(0, q) is S^2 x S^1 and L(1, q) is S^3.
    """
    if p < 0:
        p, q = -p, -q
    if p == 0:
        return (0, 1)
    return (p, q % p)


def lens_equivalent(a: tuple[int, int], b: tuple[int, int], oriented: bool = False) -> bool:
    """Homeomorphism test for lens spaces, optionally orientation-preserving."""
    pa, qa = normalize_lens(*a)
    pb, qb = normalize_lens(*b)
    if pa != pb:
        return False
    if pa <= 1:
        return True
    inv = pow(qa, -1, pa)
    allowed = {qa, inv}
    if not oriented:
        allowed |= {(-qa) % pa, (-inv) % pa}
    return qb in allowed


def lens_parameters(x1: RationalLike, x2: RationalLike) -> tuple[int, int]:
    """Lens space glued from two fibered solid tori with coefficients x1, x2.

    With ``x_i = beta_i/alpha_i`` the meridian of the second torus is
    ``-q m_1 + p l_1`` in a meridian-longitude basis of the first, where
    ``p = alpha_1 beta_2 + alpha_2 beta_1``.
    """
    x1, x2 = as_rational(x1), as_rational(x2)
    b1, a1 = x1.numerator, x1.denominator
    b2, a2 = x2.numerator, x2.denominator
    p = a1 * b2 + a2 * b1
    g, u, v = _egcd(a1, b1)
    if g < 0:
        u, v = -u, -v
    # a1*u + b1*v = 1, so (gamma, delta) = (-v, u) completes (a1, b1) to a basis
    gamma, delta = -v, u
    q = -(a2 * delta + b2 * gamma)
    return normalize_lens(p, q)


def recognize(si: SeifertInvariants) -> SfsClassification:
    """Classify as a lens space, a connected sum of lens spaces, or neither.

    Over S^2 without degenerate fibers, at most two exceptional fibers give a
    lens space.  With a degenerate fiber every remaining fiber ``b/a``
    contributes a summand L(a, b) (L(1, 0) = S^3 for regular fibers) and each
    further degenerate fiber an S^2 x S^1.
    """
    if si.base is BaseSurface.PROJECTIVE_PLANE:
        canon = si if si.degenerate else normalize(si)
        return SfsClassification(SfsKind.SEIFERT_OVER_RP2, invariants=canon)

    if si.degenerate:
        finite = [c for c in si.coefficients if not c.is_infinite()]
        extra = sum(1 for c in si.coefficients if c.is_infinite()) - 1
        summands = [normalize_lens(c.denominator, c.numerator) for c in finite]
        summands += [(0, 1)] * extra
        if not summands:
            summands = [(1, 0)]
        summands.sort()
        if len(summands) == 1:
            return SfsClassification(SfsKind.LENS_SPACE, lens=tuple(summands))
        return SfsClassification(SfsKind.CONNECTED_SUM, lens=tuple(summands))

    canon = normalize(si)
    b = canon.coefficients[0]
    fracs = list(canon.coefficients[1:])
    if len(fracs) <= 2:
        fracs += [ExtendedRational(0)] * (2 - len(fracs))
        return SfsClassification(SfsKind.LENS_SPACE, lens=(lens_parameters(fracs[0] + b, fracs[1]),))
    return SfsClassification(SfsKind.SEIFERT_OVER_S2, invariants=canon)


def is_homeomorphic(x: SeifertInvariants, y: SeifertInvariants) -> bool:
    """Compare normal forms in both orientations.

    Over S^2, spaces with at most two exceptional fibers are compared as lens
    spaces instead, since distinct normal forms can give the same lens space.
    """
    _require_nondegenerate(x)
    _require_nondegenerate(y)
    if x.base != y.base:
        return False
    nx = normalize(x)
    if nx == normalize(y) or nx == normalize(negate(y)):
        return True
    if x.base is BaseSurface.SPHERE:
        rx, ry = recognize(x), recognize(y)
        if rx.kind is SfsKind.LENS_SPACE and ry.kind is SfsKind.LENS_SPACE:
            return lens_equivalent(rx.lens[0], ry.lens[0])
    return False
