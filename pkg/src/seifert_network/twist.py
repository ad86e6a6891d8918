"""Twisting along seiferters, annular pairs and Hopf pairs.

A pair of surgeries ``(x/y, s/t)`` on a Hopf link ``a u b`` is kept as four
integers rather than two normalized rationals: the twist maps are unimodular
and preserve the determinant ``x*s - y*t`` exactly on these representatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rational import ExtendedRational, RationalLike, as_rational

__all__ = [
    "AnnularTwistSurgeries",
    "HopfPairState",
    "TwistStep",
    "annular_twist",
    "hopf_twist_a",
    "hopf_twist_b",
    "apply_steps",
    "decompose",
    "seiferter_twist_slope",
]


@dataclass(frozen=True)
class AnnularTwistSurgeries:
    c1_slope: ExtendedRational
    c2_slope: ExtendedRational


def annular_twist(p: int, l: int) -> AnnularTwistSurgeries:
    """Surgeries realizing a p-twist along an annular pair with linking number l."""
    if p == 0:
        raise ValueError("a 0-twist along an annular pair is the identity")
    inv = ExtendedRational(1, p)
    return AnnularTwistSurgeries(l - inv, l + inv)


@dataclass(frozen=True)
class HopfPairState:
    """Surgery coefficients ``x/y`` on ``a`` and ``s/t`` on ``b``."""

    x: int
    y: int
    s: int
    t: int

    def __post_init__(self):
        if (self.x, self.y) == (0, 0) or (self.s, self.t) == (0, 0):
            raise ValueError("0/0 is not a surgery coefficient")

    @classmethod
    def of(cls, a_coeff: RationalLike, b_coeff: RationalLike) -> "HopfPairState":
        a, b = as_rational(a_coeff), as_rational(b_coeff)
        return cls(a.numerator, a.denominator, b.numerator, b.denominator)

    @property
    def a_coeff(self) -> ExtendedRational:
        return ExtendedRational(self.x, self.y)

    @property
    def b_coeff(self) -> ExtendedRational:
        return ExtendedRational(self.s, self.t)

    @property
    def determinant(self) -> int:
        return self.x * self.s - self.y * self.t

    def is_trivial(self) -> bool:
        """Both coefficients are oo, i.e. no surgery at all."""
        return self.y == 0 and self.t == 0

    def to_json(self) -> dict:
        return {"a": self.a_coeff.to_json(), "b": self.b_coeff.to_json()}

    def __str__(self):
        return f"({self.a_coeff}, {self.b_coeff})"


def hopf_twist_a(state: HopfPairState, m: int) -> HopfPairState:
    """m-twist along a: ``(x/y, s/t) -> (x/(y+mx), (s+mt)/t)``."""
    return HopfPairState(state.x, state.y + m * state.x, state.s + m * state.t, state.t)


def hopf_twist_b(state: HopfPairState, n: int) -> HopfPairState:
    """n-twist along b: ``(x/y, s/t) -> ((x+ny)/y, s/(t+ns))``."""
    return HopfPairState(state.x + n * state.y, state.y, state.s, state.t + n * state.s)


@dataclass(frozen=True)
class TwistStep:
    component: str  # "A" or "B"
    count: int

    def to_json(self) -> dict:
        return {"component": self.component, "count": self.count}


def apply_steps(state: HopfPairState, steps: Iterable[TwistStep]) -> HopfPairState:
    for step in steps:
        if step.component == "A":
            state = hopf_twist_a(state, step.count)
        elif step.component == "B":
            state = hopf_twist_b(state, step.count)
        else:
            raise ValueError(f"unknown Hopf component {step.component!r}")
    return state


def _trunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def decompose(state: HopfPairState) -> list[TwistStep]:
    """Alternate twists A, B, A, ... that turn ``state`` into ``(oo, oo)``.

    The Euclidean algorithm on ``(x, y)`` drives ``y`` to 0, then one twist
    along b clears ``t``.  Every count is non-zero except possibly the last.
    """
    if abs(state.determinant) != 1:
        raise ValueError(f"|xs - yt| = {abs(state.determinant)}, need 1")
    if state.is_trivial():
        return []

    steps: list[TwistStep] = []

    def push(component, count):
        nonlocal state
        steps.append(TwistStep(component, count))
        state = apply_steps(state, [steps[-1]])

    if state.y == 0:
        # already x/y = oo: (x, 0) -> (x, x) -> (-x, x) -> (-x, 0)
        push("A", 1)
        push("B", -2)
        push("A", 1)
    else:
        first = True
        while state.y != 0:
            x, y = state.x, state.y
            if x == 0:
                m = 1  # y = +-1 and an a-twist cannot reduce it; any non-zero count works
            else:
                m = -_trunc_div(y, x)
                if m == 0 and first:
                    # |y| < |x|: overshoot by one so the opening count is non-zero
                    m = -1 if (x > 0) == (y > 0) else 1
            push("A", m)
            first = False
            if state.y == 0:
                break
            x, y = state.x, state.y
            if abs(y) == 1:
                n = (y - x) * y  # makes x equal y, the next a-twist then clears y
            else:
                n = -_trunc_div(x, y)
            push("B", n)
    # x = +-1 now, hence s = +-1 and a single b-twist clears t
    push("B", -state.t * state.s)
    return steps


def seiferter_twist_slope(s: RationalLike, n: int) -> ExtendedRational:
    """Surgery coefficient on a seiferter after an n-twist along it.

    ``s -> 1/(1/s + n)``.  A -1/n surgery on the seiferter is the n-twist
    itself, so ``seiferter_twist_slope(-1/n, n)`` is oo (no surgery left).
    """
    s = as_rational(s)
    return (s.reciprocal() + n).reciprocal()
