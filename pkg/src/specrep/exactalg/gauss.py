"""Gaussian rationals Q(i) and the scalar helpers shared by every layer.

Scalars are either `fractions.Fraction` (field tag FIELD_Q) or `GaussRational`
(field tag FIELD_QI).  Both are exact and immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

FIELD_Q = "Q"
FIELD_QI = "Q(i)"


class GaussRational:
    """a + b*i with rational a, b; the involution is complex conjugation."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return self * GaussRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_rational(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


I = GaussRational(0, 1)


def conj(s):
    """Involution: identity on Fraction, conjugation on GaussRational."""
    if isinstance(s, GaussRational):
        return s.conjugate()
    return s


def as_gauss(s) -> GaussRational:
    if isinstance(s, GaussRational):
        return s
    return GaussRational(s)


def as_fraction(s) -> Fraction:
    """Downcast to Q; raises if the imaginary part is nonzero."""
    if isinstance(s, GaussRational):
        if s.im != 0:
            raise ValueError(f"scalar {s} is not rational")
        return s.re
    return Fraction(s)


def scalar_zero(field):
    return Fraction(0) if field == FIELD_Q else GaussRational(0)


def scalar_one(field):
    return Fraction(1) if field == FIELD_Q else GaussRational(1)


def coerce_scalar(s, field):
    if field == FIELD_Q:
        return as_fraction(s)
    return as_gauss(s)


def scalar_is_zero(s) -> bool:
    if isinstance(s, GaussRational):
        return s.is_zero()
    return s == 0


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s) -> str:
    """Canonical text: "3/4", "1/2+5/2i", "-i", "0"."""
    if not isinstance(s, GaussRational):
        return format_fraction(Fraction(s))
    re, im = s.re, s.im
    if im == 0:
        return format_fraction(re)
    if im == 1:
        imtxt = "i"
    elif im == -1:
        imtxt = "-i"
    else:
        imtxt = format_fraction(im) + "i"
    if re == 0:
        return imtxt
    sign = "+" if im > 0 else ""
    return format_fraction(re) + sign + imtxt


def is_rational_square(q: Fraction):
    """Return r with r*r == q >= 0, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def squarefree_decompose_int(n: int):
    """n = s^2 * r with r squarefree; returns (s, r).  n must be positive.

    Trial division; exact for n whose square factors have a prime part below
    the cap, with a perfect-square fallback.  Desk-scale inputs stay tiny.
    """
    if n <= 0:
        raise ValueError("positive integer required")
    s, r = 1, 1
    m = n
    p = 2
    cap = 2_000_000
    while p * p <= m and p <= cap:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    # remaining cofactor is prime or a perfect square beyond the cap
    if m > 1:
        rt = isqrt(m)
        if rt * rt == m:
            s *= rt
        else:
            r *= m
    return s, r
