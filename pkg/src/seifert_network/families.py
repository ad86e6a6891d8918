"""Closed-form Seifert surgeries of the families EM I, EM II, EM III.

Each family vertex comes from a trivializable tangle ``T`` whose fillings
``T + R(0)`` and ``T + R(1)`` are Montesinos(-m) links.  The 0-filling gives
the slope ``gamma`` and the 1-filling gives ``gamma - 1``; the surgered
manifold is the two-fold branched cover of the filled link.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .rational import ExtendedRational, RationalLike, as_rational, INF
from .seifert import BaseSurface, SeifertInvariants, montesinos_to_sfs

__all__ = [
    "PreconditionError",
    "EM1Knot",
    "EM2Knot",
    "EM3Knot",
    "TorusKnot",
    "Unknot",
    "UNKNOT",
    "SymbolicSlope",
    "GAMMA",
    "SurgeryVertex",
    "SurgeryResult",
    "SurgeryDescription",
    "Trivialization",
    "gamma_em1",
    "gamma_em2",
    "em1_links",
    "em2_links",
    "em1_vertex",
    "em2_vertex",
    "em3_check_parameters",
    "em3_trivializable",
    "em3_conditions",
    "em3_vertex",
    "em3_surgery_description",
    "torus_reducible_surgery",
]


class PreconditionError(ValueError):
    """A family constructor was called outside its parameter domain."""


# ---------------------------------------------------------------------------
# knots and vertices


@dataclass(frozen=True)
class EM1Knot:
    l: int
    n: int
    p: int

    def label(self) -> str:
        return f"EM1({self.l},{self.n},{self.p})"

    def to_json(self) -> dict:
        return {"family": "EM1", "params": {"l": self.l, "n": self.n, "p": self.p}}


@dataclass(frozen=True)
class EM2Knot:
    l: int
    m: int
    n: int
    p: int

    def label(self) -> str:
        return f"EM2({self.l},{self.m},{self.n},{self.p})"

    def to_json(self) -> dict:
        return {"family": "EM2", "params": {"l": self.l, "m": self.m, "n": self.n, "p": self.p}}


@dataclass(frozen=True)
class EM3Knot:
    a1: ExtendedRational
    a2: ExtendedRational
    a3: ExtendedRational

    def label(self) -> str:
        return f"EM3({self.a1},{self.a2},{self.a3})"

    def to_json(self) -> dict:
        return {"family": "EM3",
                "params": {"a1": self.a1.to_json(), "a2": self.a2.to_json(), "a3": self.a3.to_json()}}


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise PreconditionError(f"torus knot parameters ({self.p},{self.q}) are not coprime")

    def label(self) -> str:
        return f"Torus({self.p},{self.q})"

    def to_json(self) -> dict:
        return {"family": "Torus", "params": {"p": self.p, "q": self.q}}


@dataclass(frozen=True)
class Unknot:
    def label(self) -> str:
        return "Unknot"

    def to_json(self) -> dict:
        return {"family": "Unknot", "params": {}}


UNKNOT = Unknot()

KnotId = Union[EM1Knot, EM2Knot, EM3Knot, TorusKnot, Unknot]


@dataclass(frozen=True)
class SymbolicSlope:
    """A slope known only by name (the EM III covering slope)."""

    name: str

    def to_json(self) -> str:
        return self.name

    def __str__(self):
        return self.name


GAMMA = SymbolicSlope("gamma")

Slope = Union[ExtendedRational, SymbolicSlope]


@dataclass(frozen=True)
class SurgeryVertex:
    knot: KnotId
    slope: Slope

    def id(self) -> str:
        return f"{self.knot.label()}@{self.slope}"

    def to_json(self) -> dict:
        doc = self.knot.to_json()
        doc["slope"] = self.slope.to_json()
        return doc


@dataclass(frozen=True)
class SurgeryResult:
    vertex: SurgeryVertex
    space: SeifertInvariants

    def to_json(self) -> dict:
        doc = self.vertex.to_json()
        doc["space"] = self.space.to_json()
        return doc


@dataclass(frozen=True)
class SurgeryDescription:
    """Surgery on a labeled link; ``coefficients[i]`` sits on ``components[i]``."""

    components: tuple[str, ...]
    coefficients: tuple[ExtendedRational, ...]

    def as_dict(self) -> dict[str, ExtendedRational]:
        return dict(zip(self.components, self.coefficients))

    def to_json(self) -> dict:
        return {"components": list(self.components),
                "coefficients": [c.to_json() for c in self.coefficients]}


# ---------------------------------------------------------------------------
# EM I and EM II


def _ratio(num: int, den: int) -> ExtendedRational:
    try:
        return ExtendedRational(num, den)
    except ZeroDivisionError:
        raise PreconditionError("tangle fraction 0/0 at these parameters") from None


def _require_trivializable(n: int, p: int):
    if n != 0 and p != 0:
        raise PreconditionError(
            f"n={n}, p={p}: the tangle is trivializable if and only if n or p is 0")


def _pick_branch(n: int, p: int, branch: str | None) -> str:
    _require_trivializable(n, p)
    if branch is None:
        return "n" if p == 0 else "p"
    if branch == "n" and p != 0:
        raise PreconditionError("n-branch needs p = 0")
    if branch == "p" and n != 0:
        raise PreconditionError("p-branch needs n = 0")
    if branch not in ("n", "p"):
        raise ValueError(f"unknown branch {branch!r}")
    return branch


def gamma_em1(l: int, n: int, p: int, branch: str | None = None) -> int:
    """Covering slope of the 0-untangle surgery on T(l, n, p).

    At n = p = 0 both closed forms apply; ``branch`` selects one.

    Note: for p != 0 the homology order of the p-branch spaces is
    ``|12l^2 - 4l - 4p(3l-1)^2|`` (and that minus one), not the absolute
    value of this closed form.  The closed form is kept as stated; see
    ``checks.h1_order``.
    """
    if _pick_branch(n, p, branch) == "n":
        return 12 * l * l - 4 * l - 36 * l * l * n
    return 12 * l * l - 4 * l - 4 * p * (3 * l - 1)


def gamma_em2(l: int, m: int, n: int, p: int, branch: str | None = None) -> int:
    """Covering slope of the 0-untangle surgery on T(l, m, n, p)."""
    base = l * (2 * m - 1) * (1 - l * m)
    if _pick_branch(n, p, branch) == "n":
        return base + n * (2 * l * m - 1) ** 2
    return base + p * (2 * l * m - l - 1) ** 2


def em1_links(l: int, n: int, p: int, branch: str | None = None):
    """Montesinos(-m) links ``T(l,n,p) + R(0)`` and ``T(l,n,p) + R(1)``.

    Returns ``{0: (base, ratios), 1: (base, ratios)}``.  ``branch`` picks the
    n = 0 or p = 0 description explicitly; by default the n-branch is used
    whenever p = 0.
    """
    if _pick_branch(n, p, branch) == "n":
        return {
            0: (BaseSurface.PROJECTIVE_PLANE,
                [_ratio(9 * l * n - 3 * l + 1, 6 * l * n - 2 * l - n + 1), ExtendedRational(l)]),
            1: (BaseSurface.SPHERE,
                [ExtendedRational(3),
                 _ratio(9 * l * n - 3 * l - 3 * n + 2, -6 * l * n + 2 * l + n - 1),
                 _ratio(l + 1, -l)]),
        }
    return {
        0: (BaseSurface.PROJECTIVE_PLANE,
            [_ratio(3 * l - 1, 2 * l - 1), _ratio(3 * l * p - l - p, 3 * p - 1)]),
        1: (BaseSurface.SPHERE,
            [ExtendedRational(3),
             _ratio(3 * l - 2, -2 * l + 1),
             _ratio(3 * l * p - l + 2 * p - 1, -3 * l * p + l + p)]),
    }


def em2_links(l: int, m: int, n: int, p: int, branch: str | None = None):
    """Montesinos links ``T(l,m,n,p) + R(0)`` and ``T(l,m,n,p) + R(1)``."""
    S2 = BaseSurface.SPHERE
    if _pick_branch(n, p, branch) == "n":
        den = 4 * m * n - 2 * m + 1
        return {
            0: (S2, [ExtendedRational(l - 1),
                     _ratio(2 * m * n - m - n + 1, den),
                     _ratio(l * m + m - 1, -m)]),
            1: (S2, [ExtendedRational(l + 1),
                     _ratio(-2 * m * n + m - n, den),
                     _ratio(-l * m + m + 1, m)]),
        }
    den = -2 * m * p + m + p
    return {
        0: (S2, [ExtendedRational(l - 1),
                 _ratio(2 * l * m * p - l * m - l * p + 2 * m * p - m - 3 * p + 1, den),
                 _ratio(m - 1, 2 * m - 1)]),
        1: (S2, [ExtendedRational(l + 1),
                 _ratio(2 * l * m * p - l * m - l * p - 2 * m * p + m - p + 1, den),
                 _ratio(-m, 2 * m - 1)]),
    }


def em1_vertex(l: int, n: int, p: int, minus_one: bool = False) -> SurgeryResult:
    """``(K(l,n,p), gamma)`` or ``(K(l,n,p), gamma - 1)`` with its Seifert space."""
    gamma = gamma_em1(l, n, p)
    base, ratios = em1_links(l, n, p)[1 if minus_one else 0]
    slope = ExtendedRational(gamma - 1 if minus_one else gamma)
    return SurgeryResult(SurgeryVertex(EM1Knot(l, n, p), slope), montesinos_to_sfs(base, ratios))


def em2_vertex(l: int, m: int, n: int, p: int, minus_one: bool = False) -> SurgeryResult:
    """``(K(l,m,n,p), gamma)`` or ``(K(l,m,n,p), gamma - 1)`` with its Seifert space."""
    gamma = gamma_em2(l, m, n, p)
    base, ratios = em2_links(l, m, n, p)[1 if minus_one else 0]
    slope = ExtendedRational(gamma - 1 if minus_one else gamma)
    return SurgeryResult(SurgeryVertex(EM2Knot(l, m, n, p), slope), montesinos_to_sfs(base, ratios))


# ---------------------------------------------------------------------------
# EM III

_EXCLUDED_12 = frozenset(as_rational(v) for v in ("1/0", 0, 1, 2))
_EXCLUDED_3 = frozenset(as_rational(v) for v in ("1/0", 0, 1, -1, "-1/2", 2))


@dataclass(frozen=True)
class Trivialization:
    """Which condition makes ``Q(A, B, C) + R(oo)`` a trivial knot.

    ``case`` is ``"i"`` (C = 1/n) or ``"ii"`` (A = 1/p); ``swapped`` means
    the condition holds after interchanging A and B.
    """

    case: str
    parameter: int
    swapped: bool = False


def em3_check_parameters(a1: RationalLike, a2: RationalLike, a3: RationalLike):
    a1, a2, a3 = as_rational(a1), as_rational(a2), as_rational(a3)
    for name, a in (("a1", a1), ("a2", a2)):
        if a in _EXCLUDED_12:
            raise PreconditionError(f"{name}={a} is excluded (must avoid oo, 0, 1, 2)")
    if a3 in _EXCLUDED_3:
        raise PreconditionError(f"a3={a3} is excluded (must avoid oo, 0, 1, -1, -1/2, 2)")
    return a1, a2, a3


def _unit_reciprocal(a: ExtendedRational) -> int | None:
    """``k`` with ``a = 1/k``, or None."""
    if abs(a.numerator) == 1:
        return a.numerator * a.denominator
    return None


def _case_ii(first: ExtendedRational, second: ExtendedRational, third: ExtendedRational) -> int | None:
    p = _unit_reciprocal(first)
    if p is None:
        return None
    al2, be2 = second.numerator, second.denominator
    al3, be3 = third.numerator, third.denominator
    if abs(p * al2 * al3 + al2 * be3 + be2 * al3) == 1:
        return p
    return None


def _case_i(a1: ExtendedRational, a2: ExtendedRational, a3: ExtendedRational) -> int | None:
    n = _unit_reciprocal(a3)
    if n is None:
        return None
    al1, be1 = a1.numerator, a1.denominator
    al2, be2 = a2.numerator, a2.denominator
    if abs(n * al1 * al2 + al1 * be2 + be1 * al2) == 1:
        return n
    return None


def em3_conditions(a1: RationalLike, a2: RationalLike, a3: RationalLike) -> list[Trivialization]:
    """Every trivializing condition that holds, in the order ii, ii swapped, i."""
    a1, a2, a3 = em3_check_parameters(a1, a2, a3)
    found = []
    p = _case_ii(a1, a2, a3)
    if p is not None:
        found.append(Trivialization("ii", p))
    p = _case_ii(a2, a1, a3)
    if p is not None:
        found.append(Trivialization("ii", p, swapped=True))
    n = _case_i(a1, a2, a3)
    if n is not None:
        found.append(Trivialization("i", n))
    return found


def em3_trivializable(a1: RationalLike, a2: RationalLike, a3: RationalLike) -> Trivialization | None:
    """First trivializing condition for ``Q(a1, a2, a3)``, or None if the tangle is not trivializable."""
    found = em3_conditions(a1, a2, a3)
    return found[0] if found else None


def _require_em3(a1, a2, a3) -> tuple[ExtendedRational, ExtendedRational, ExtendedRational, Trivialization]:
    a1, a2, a3 = em3_check_parameters(a1, a2, a3)
    triv = em3_trivializable(a1, a2, a3)
    if triv is None:
        raise PreconditionError(
            f"Q({a1}, {a2}, {a3}) + R(oo) is not a trivial knot: neither "
            "n*al1*al2 + al1*be2 + be1*al2 = +-1 (a3 = 1/n) nor the a1 = 1/p condition holds")
    return a1, a2, a3, triv


def em3_vertex(a1: RationalLike, a2: RationalLike, a3: RationalLike) -> SurgeryResult:
    """``(K(A, B, C), gamma)``; the slope is kept symbolic.

    ``Q + R(-1)`` is ``M(a1 - 2, a2 - 2, a3 + 1)``.
    """
    a1, a2, a3, _ = _require_em3(a1, a2, a3)
    space = montesinos_to_sfs(BaseSurface.SPHERE, [a1 - 2, a2 - 2, a3 + 1])
    return SurgeryResult(SurgeryVertex(EM3Knot(a1, a2, a3), GAMMA), space)


def em3_surgery_description(a1: RationalLike, a2: RationalLike, a3: RationalLike) -> SurgeryDescription:
    """Surgery on ``a, b, c, k`` producing ``(K(A, B, C), gamma)`` from ``(k, -1)``."""
    a1, a2, a3, triv = _require_em3(a1, a2, a3)
    k = ExtendedRational(-1)
    if triv.case == "i":
        return SurgeryDescription(("a", "b", "c", "k"), (-a1, -a2, ExtendedRational(triv.parameter), k))
    first, second = (a2, a1) if triv.swapped else (a1, a2)
    labels = ("b", "a", "c", "k") if triv.swapped else ("a", "b", "c", "k")
    return SurgeryDescription(
        labels, (ExtendedRational(-1, triv.parameter), -second, a3.reciprocal(), k))


# ---------------------------------------------------------------------------
# torus knots


def torus_reducible_surgery(p: int, q: int) -> SurgeryResult:
    """``(T_{p,q}, pq)``, whose result is L(p, q) # L(q, p).

    The space is written with a degenerate fiber, ``S2(q/p, p/q, oo)``.
    """
    if p == 0 or q == 0:
        raise PreconditionError(f"T({p},{q}) has a zero parameter")
    knot = TorusKnot(p, q)
    space = SeifertInvariants(BaseSurface.SPHERE, [ExtendedRational(q, p), ExtendedRational(p, q), INF])
    return SurgeryResult(SurgeryVertex(knot, ExtendedRational(p * q)), space)
