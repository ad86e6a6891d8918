"""Exact arithmetic on Q u {oo}, continued fractions and covering slopes.

``ExtendedRational`` is the coefficient type used everywhere else: tangle
fractions, surgery slopes and Seifert invariants.  Values are kept in lowest
terms with a non-negative denominator, so ``oo`` is ``1/0`` and zero is
``0/1``.  Infinity is unsigned.

Only the infinite cases needed by continued fractions are defined::

    1/0 = oo,   a + oo = oo (a finite),   1/oo = 0

``oo + oo`` and ``0 * oo`` raise :class:`InfinityArithmeticError`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "ExtendedRational",
    "HomologyPair",
    "InfinityArithmeticError",
    "INF",
    "ZERO",
    "ONE",
    "as_rational",
    "cf_eval",
    "cf_expand",
    "meridian_lift",
    "covering_slope",
]


class InfinityArithmeticError(ArithmeticError):
    """An operation involving oo that has no value (oo + oo, 0 * oo, ...)."""


RationalLike = Union["ExtendedRational", int, Fraction, str]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class ExtendedRational:
    """An element of Q u {oo} in lowest terms."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: int, denominator: int = 1):
        if not isinstance(numerator, int) or not isinstance(denominator, int):
            raise TypeError("numerator and denominator must be integers")
        if numerator == 0 and denominator == 0:
            raise ZeroDivisionError("0/0 is not an element of Q u {oo}")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        g = math.gcd(numerator, denominator)
        if denominator == 0:
            numerator = 1
        else:
            numerator //= g
            denominator //= g
        object.__setattr__(self, "_num", numerator)
        object.__setattr__(self, "_den", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedRational is immutable")

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_infinite(self) -> bool:
        return self._den == 0

    def is_integer(self) -> bool:
        return self._den == 1

    def as_fraction(self) -> Fraction:
        if self._den == 0:
            raise InfinityArithmeticError("oo has no Fraction value")
        return Fraction(self._num, self._den)

    # -- construction -----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        """Parse ``"p/q"`` or ``"p"``; the sign may only sit on ``p``."""
        m = _RATIONAL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a rational literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        return cls(num, den)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "ExtendedRational":
        if self._den == 0:
            return self
        return ExtendedRational(-self._num, self._den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == 0 and other._den == 0:
            raise InfinityArithmeticError("oo + oo is undefined")
        if self._den == 0 or other._den == 0:
            return INF
        return ExtendedRational(self._num * other._den + other._num * self._den,
                                self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == 0 or other._den == 0:
            if self._num == 0 or other._num == 0:
                raise InfinityArithmeticError("0 * oo is undefined")
            return INF
        return ExtendedRational(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def reciprocal(self) -> "ExtendedRational":
        if self._den == 0:
            return ZERO
        if self._num == 0:
            return INF
        return ExtendedRational(self._den, self._num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    def floor(self) -> int:
        if self._den == 0:
            raise InfinityArithmeticError("floor of oo")
        return self._num // self._den

    def fractional_part(self) -> "ExtendedRational":
        """``self - floor(self)``, in ``[0, 1)``."""
        if self._den == 0:
            raise InfinityArithmeticError("fractional part of oo")
        return ExtendedRational(self._num % self._den, self._den)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        # integers hash like int; other values hash cheaply (not like Fraction)
        if self._den == 1:
            return hash(self._num)
        return hash((self._num, self._den))

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == 0 or other._den == 0:
            raise InfinityArithmeticError("oo is unordered")
        return self._num * other._den < other._num * self._den

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other < self

    def __ge__(self, other):
        return self == other or self > other

    def sort_key(self):
        """Total order for deterministic output: finite values first, then oo."""
        if self._den == 0:
            return (1, Fraction(0))
        return (0, Fraction(self._num, self._den))

    # -- text -------------------------------------------------------------

    def to_json(self) -> str:
        return f"{self._num}/{self._den}"

    def __str__(self):
        if self._den == 1:
            return str(self._num)
        return f"{self._num}/{self._den}"

    def __repr__(self):
        return f"ExtendedRational({self._num}, {self._den})"

    def __reduce__(self):
        return (ExtendedRational, (self._num, self._den))


def _coerce(value):
    if isinstance(value, ExtendedRational):
        return value
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, int):
        return ExtendedRational(value, 1)
    if isinstance(value, Fraction):
        return ExtendedRational(value.numerator, value.denominator)
    return NotImplemented


def as_rational(value: RationalLike) -> ExtendedRational:
    """Convert an int, Fraction, ``"p/q"`` string or ExtendedRational."""
    if isinstance(value, str):
        return ExtendedRational.parse(value)
    result = _coerce(value)
    if result is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a rational")
    return result


INF = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)
ONE = ExtendedRational(1, 1)


@dataclass(frozen=True)
class HomologyPair:
    """Coordinates of a curve in H_1 of a torus, basis (mu_oo, lambda)."""

    mu_coeff: int
    lambda_coeff: int

    def __post_init__(self):
        if math.gcd(self.mu_coeff, self.lambda_coeff) != 1:
            raise ValueError("homology pair must be primitive")


def cf_eval(terms: Sequence[int]) -> ExtendedRational:
    """Evaluate ``a_n + 1/(a_{n-1} + ... + 1/a_1)`` for ``terms = [a_1, ..., a_n]``.

    The innermost term is ``terms[0]``; a zero there makes the next level oo.
    """
    if len(terms) == 0:
        raise ValueError("continued fraction needs at least one term")
    value = as_rational(terms[0])
    for a in terms[1:]:
        value = a + value.reciprocal()
    return value


def cf_expand(r: RationalLike) -> list[int]:
    """Canonical continued fraction of a finite rational, innermost term first.

    Integer parts are peeled off from the outermost position by floor
    division, so ``cf_eval(cf_expand(r)) == r`` and every intermediate value
    is finite.
    """
    r = as_rational(r)
    if r.is_infinite():
        raise ValueError("oo has no finite continued fraction")
    num, den = r.numerator, r.denominator
    outer_first = []
    while True:
        q, rem = divmod(num, den)
        outer_first.append(q)
        if rem == 0:
            break
        num, den = den, rem
    return outer_first[::-1]


def meridian_lift(r: RationalLike) -> HomologyPair:
    """Class of the lifted meridian of R(p/q): ``-p [mu_oo] + q [lambda]``."""
    r = as_rational(r)
    return HomologyPair(-r.numerator, r.denominator)


def covering_slope(s: RationalLike) -> ExtendedRational:
    """Surgery slope upstairs for an s-untangle surgery (preferred framing)."""
    s = as_rational(s)
    if s.is_infinite():
        raise ValueError("replacing R(oo) by itself is not a surgery")
    return -s


def sorted_rationals(values: Iterable[ExtendedRational]) -> list[ExtendedRational]:
    return sorted(values, key=ExtendedRational.sort_key)
