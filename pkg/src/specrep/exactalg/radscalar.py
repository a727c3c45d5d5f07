"""Single-radical exact scalars coeff*sqrt(radicand) and polynomials scaled
by one radical.  Enough for D^{1/2} N D^{-1/2} entries; no nested or mixed
radicals — adding different radicands is an error by design.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .gauss import FIELD_QI, GaussRational, as_gauss, format_scalar, squarefree_decompose_int
from .poly import UniPoly


def _canon_sqrt(q: Fraction):
    """sqrt(q) = s * sqrt(r) with r a squarefree positive integer; (s, r)."""
    if q <= 0:
        raise ValueError(f"radicand must be positive, got {q}")
    nd = q.numerator * q.denominator
    s, r = squarefree_decompose_int(nd)
    return Fraction(s, q.denominator), Fraction(r)


class RadScalar:
    """coeff * sqrt(radicand); radicand a squarefree positive integer (as a
    Fraction), radicand 1 for plain scalars."""

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff, radicand=Fraction(1)):
        coeff = as_gauss(coeff)
        radicand = Fraction(radicand)
        if radicand <= 0:
            raise ValueError("radicand must be positive")
        if coeff.is_zero():
            radicand = Fraction(1)
        elif radicand != 1:
            s, r = _canon_sqrt(radicand)
            coeff, radicand = coeff * s, r
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("RadScalar is immutable")

    @classmethod
    def sqrt(cls, q) -> "RadScalar":
        return cls(1, Fraction(q))

    @classmethod
    def rational(cls, q) -> "RadScalar":
        return cls(q, 1)

    def is_zero(self):
        return self.coeff.is_zero()

    def is_rational_value(self):
        return self.radicand == 1 and self.coeff.is_rational()

    def conj(self):
        return RadScalar(self.coeff.conjugate(), self.radicand)

    def __neg__(self):
        return RadScalar(-self.coeff, self.radicand)

    def __mul__(self, other):
        if isinstance(other, RadScalar):
            return RadScalar(
                self.coeff * other.coeff, self.radicand * other.radicand
            )
        return RadScalar(self.coeff * as_gauss(other), self.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RadScalar):
            if other.is_zero():
                raise ZeroDivisionError
            # 1/sqrt(r) = sqrt(r)/r
            return RadScalar(
                self.coeff / (other.coeff * other.radicand),
                self.radicand * other.radicand,
            )
        return RadScalar(self.coeff / as_gauss(other), self.radicand)

    def __add__(self, other):
        if not isinstance(other, RadScalar):
            other = RadScalar(other, 1)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.radicand != other.radicand:
            raise ValueError(
                f"cannot add radicals sqrt({self.radicand}) and sqrt({other.radicand})"
            )
        return RadScalar(self.coeff + other.coeff, self.radicand)

    def __sub__(self, other):
        if not isinstance(other, RadScalar):
            other = RadScalar(other, 1)
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, RadScalar):
            return self.coeff == other.coeff and self.radicand == other.radicand
        return self == RadScalar(other, 1)

    def __hash__(self):
        return hash((self.coeff, self.radicand))

    def to_float(self) -> complex:
        r = math.sqrt(self.radicand)
        return complex(float(self.coeff.re) * r, float(self.coeff.im) * r)

    def as_json(self):
        return {"coeff": format_scalar(self.coeff), "radicand": str(self.radicand)}

    def __str__(self):
        if self.radicand == 1:
            return format_scalar(self.coeff)
        c = format_scalar(self.coeff)
        body = f"sqrt({self.radicand})"
        if c == "1":
            return body
        if c == "-1":
            return "-" + body
        return f"{c}*{body}"

    def __repr__(self):
        return f"RadScalar({self})"


class RadPoly:
    """sqrt(radicand) * poly, the shape of one spectral-matrix entry.

    The Gaussian-rational part is always folded into the polynomial, so equal
    values have equal representations.
    """

    __slots__ = ("radicand", "poly")

    def __init__(self, radicand, poly: UniPoly):
        radicand = Fraction(radicand)
        if poly.is_zero():
            radicand = Fraction(1)
        elif radicand != 1:
            s, r = _canon_sqrt(radicand)
            poly, radicand = poly * s, r
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "poly", poly.to_field(FIELD_QI))

    def __setattr__(self, name, value):
        raise AttributeError("RadPoly is immutable")

    @classmethod
    def from_scaled(cls, rs: RadScalar, poly: UniPoly) -> "RadPoly":
        return cls(rs.radicand, poly * rs.coeff)

    def is_zero(self):
        return self.poly.is_zero()

    def conj(self):
        return RadPoly(self.radicand, self.poly.conj())

    def __neg__(self):
        return RadPoly(self.radicand, -self.poly)

    def __add__(self, other):
        if not isinstance(other, RadPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.radicand != other.radicand:
            raise ValueError("cannot add entries with different radicands")
        return RadPoly(self.radicand, self.poly + other.poly)

    def __mul__(self, other):
        if isinstance(other, RadPoly):
            return RadPoly(self.radicand * other.radicand, self.poly * other.poly)
        if isinstance(other, RadScalar):
            return RadPoly(self.radicand * other.radicand, self.poly * other.coeff)
        return RadPoly(self.radicand, self.poly * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RadPoly):
            return NotImplemented
        return self.radicand == other.radicand and self.poly == other.poly

    def __hash__(self):
        return hash((self.radicand, self.poly))

    def as_json(self):
        return {
            "coeffs": [format_scalar(self.poly.coeff(k)) for k in range(self.poly.degree + 1)]
            or ["0"],
            "radicand": str(self.radicand),
        }

    def evaluate_float(self, a: float) -> complex:
        r = math.sqrt(self.radicand)
        acc = 0j
        for c in reversed(self.poly.coeffs):
            g = as_gauss(c)
            acc = acc * a + complex(float(g.re), float(g.im))
        return acc * r

    def __str__(self):
        from .grammar import format_unipoly

        if self.radicand == 1:
            return format_unipoly(self.poly)
        return f"sqrt({self.radicand})*({format_unipoly(self.poly)})"

    def __repr__(self):
        return f"RadPoly({self})"
