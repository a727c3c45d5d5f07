"""Dense exact polynomials: univariate UniPoly, bivariate BiPoly, and the
small rational-function wrapper RatFunc.

Coefficients are Fraction (field "Q") or GaussRational (field "Q(i)");
coefficient tuples are stored low degree first with trailing zeros stripped.
The zero polynomial has degree -1 (sentinel).
"""

from __future__ import annotations

from fractions import Fraction

from .gauss import (
    FIELD_Q,
    FIELD_QI,
    GaussRational,
    coerce_scalar,
    conj,
    scalar_is_zero,
    scalar_one,
    scalar_zero,
)


def _join_field(a, b):
    if a == b:
        return a
    return FIELD_QI


class UniPoly:
    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs, field=FIELD_Q, var="x"):
        cs = [coerce_scalar(c, field) for c in coeffs]
        while cs and scalar_is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field=FIELD_Q, var="x"):
        return cls((), field, var)

    @classmethod
    def one(cls, field=FIELD_Q, var="x"):
        return cls((1,), field, var)

    @classmethod
    def const(cls, c, field=FIELD_Q, var="x"):
        return cls((c,), field, var)

    @classmethod
    def x(cls, field=FIELD_Q, var="x"):
        return cls((0, 1), field, var)

    @classmethod
    def monomial(cls, c, k, field=FIELD_Q, var="x"):
        return cls((0,) * k + (c,), field, var)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == scalar_one(self.field)

    def lc(self):
        if not self.coeffs:
            return scalar_zero(self.field)
        return self.coeffs[-1]

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return scalar_zero(self.field)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self.coeffs}")
        return self.coeff(0)

    # -- field plumbing ---------------------------------------------------

    def to_field(self, field) -> "UniPoly":
        if field == self.field:
            return self
        return UniPoly(self.coeffs, field, self.var)

    def is_rational(self) -> bool:
        if self.field == FIELD_Q:
            return True
        return all(c.is_rational() for c in self.coeffs)

    def rational_part(self) -> "UniPoly":
        """Downcast to field Q; raises on nonzero imaginary coefficients."""
        if self.field == FIELD_Q:
            return self
        if not self.is_rational():
            raise ValueError(f"polynomial has nonreal coefficients: {self}")
        return UniPoly([c.re for c in self.coeffs], FIELD_Q, self.var)

    # -- arithmetic -------------------------------------------------------

    def _lift_pair(self, other):
        if isinstance(other, UniPoly):
            f = _join_field(self.field, other.field)
            return self.to_field(f), other.to_field(f)
        if isinstance(other, (int, Fraction)):
            return self, UniPoly.const(other, self.field, self.var)
        if isinstance(other, GaussRational):
            s = self.to_field(FIELD_QI)
            return s, UniPoly.const(other, FIELD_QI, self.var)
        return None, None

    def __add__(self, other):
        a, b = self._lift_pair(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        z = scalar_zero(a.field)
        cs = [
            (a.coeffs[k] if k < len(a.coeffs) else z)
            + (b.coeffs[k] if k < len(b.coeffs) else z)
            for k in range(n)
        ]
        return UniPoly(cs, a.field, a.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.field, self.var)

    def __sub__(self, other):
        a, b = self._lift_pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._lift_pair(other)
        if a is None:
            return NotImplemented
        if a.is_zero() or b.is_zero():
            return UniPoly.zero(a.field, a.var)
        z = scalar_zero(a.field)
        out = [z] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if scalar_is_zero(ca):
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly(out, a.field, a.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        r = UniPoly.one(self.field, self.var)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def scale(self, s) -> "UniPoly":
        return self * s

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by var^k."""
        if self.is_zero():
            return self
        return UniPoly((0,) * k + tuple(self.coeffs), self.field, self.var)

    def divmod(self, other):
        """Exact field division with remainder."""
        a, b = self._lift_pair(other)
        if a is None:
            raise TypeError("bad divisor")
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = UniPoly.zero(a.field, a.var)
        r = a
        dlc = b.lc()
        db = b.degree
        while not r.is_zero() and r.degree >= db:
            s = r.lc() / dlc
            k = r.degree - db
            t = UniPoly.monomial(s, k, a.field, a.var)
            q = q + t
            r = r - t * b
        return q, r

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division was not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        l = self.lc()
        if l == scalar_one(self.field):
            return self
        return UniPoly([c / l for c in self.coeffs], self.field, self.var)

    def derivative(self) -> "UniPoly":
        return UniPoly(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.field, self.var
        )

    def conj(self) -> "UniPoly":
        if self.field == FIELD_Q:
            return self
        return UniPoly([conj(c) for c in self.coeffs], self.field, self.var)

    def evaluate(self, a):
        """Horner evaluation at a scalar."""
        acc = scalar_zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero(self.field, inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(c, acc.field, inner.var)
        return acc

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = UniPoly.const(other, self.field, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._lift_pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        from .grammar import format_unipoly

        return f"UniPoly<{format_unipoly(self)}>"


def _int_content_strip(c):
    """Scale a nonzero integer-coefficient list to its primitive part."""
    from math import gcd

    g = 0
    for v in c:
        g = gcd(g, abs(v))
    if g > 1:
        c = [v // g for v in c]
    if c[-1] < 0:
        c = [-v for v in c]
    return c


def _to_int_coeffs(p: UniPoly):
    from math import lcm

    den = lcm(*(c.denominator for c in p.coeffs))
    return _int_content_strip([int(c * den) for c in p.coeffs])


def _gcd_q_primitive(a: UniPoly, b: UniPoly) -> UniPoly:
    # primitive pseudo-remainder sequence; avoids Fraction blowup
    u, v = _to_int_coeffs(a), _to_int_coeffs(b)
    if len(u) < len(v):
        u, v = v, u
    while True:
        # pseudo-remainder of u by v
        d = len(u) - len(v)
        r = list(u)
        lead = v[-1]
        for k in range(d, -1, -1):
            c = r[k + len(v) - 1]
            if c:
                for j in range(len(r)):
                    r[j] *= lead
                for j, cv in enumerate(v):
                    r[k + j] -= c * cv
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return UniPoly([Fraction(c) for c in v], FIELD_Q, a.var).monic()
        u, v = v, _int_content_strip(r)
        if len(v) == 1:
            return UniPoly.one(FIELD_Q, a.var)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field; gcd(0,0) = 0."""
    f = _join_field(a.field, b.field)
    a, b = a.to_field(f), b.to_field(f)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if f == FIELD_Q and a.degree >= 1 and b.degree >= 1:
        return _gcd_q_primitive(a, b)
    while not b.is_zero():
        r = a % b
        # monic remainders keep Gaussian coefficient growth in check
        a, b = b, (r if r.is_zero() else r.monic())
    return a.monic()


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return UniPoly.zero(a.field, a.var)
    g = poly_gcd(a, b)
    return (a * b).exact_div(g).monic()


def poly_xgcd(a: UniPoly, b: UniPoly):
    """(g, s, t) with s*a + t*b = g monic."""
    f = _join_field(a.field, b.field)
    a, b = a.to_field(f), b.to_field(f)
    r0, r1 = a, b
    s0, s1 = UniPoly.one(f, a.var), UniPoly.zero(f, a.var)
    t0, t1 = UniPoly.zero(f, a.var), UniPoly.one(f, a.var)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    l = r0.lc()
    inv = 1 / l if not isinstance(l, GaussRational) else scalar_one(f) / l
    return r0.monic(), s0 * inv, t0 * inv


def content_gcd(polys) -> UniPoly:
    """Monic gcd of a family of polynomials (their 'content' over F[x])."""
    g = None
    for p in polys:
        g = p if g is None else poly_gcd(g, p)
        if g is not None and g.is_one():
            return g
    if g is None:
        raise ValueError("empty family")
    return g.monic()


class BiPoly:
    """Polynomial in t with UniPoly-in-x coefficients, low t-degree first.

    The constructor is permissive; pipeline entry points call require_monic.
    """

    __slots__ = ("tcoeffs", "field")

    def __init__(self, tcoeffs, field=None):
        tc = list(tcoeffs)
        if field is None:
            field = FIELD_Q
            for c in tc:
                if isinstance(c, UniPoly) and c.field == FIELD_QI:
                    field = FIELD_QI
        tc = [
            c.to_field(field) if isinstance(c, UniPoly) else UniPoly.const(c, field)
            for c in tc
        ]
        while tc and tc[-1].is_zero():
            tc.pop()
        object.__setattr__(self, "tcoeffs", tuple(tc))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @property
    def degree_t(self) -> int:
        return len(self.tcoeffs) - 1

    def is_zero(self) -> bool:
        return not self.tcoeffs

    def coeff(self, k) -> UniPoly:
        if 0 <= k < len(self.tcoeffs):
            return self.tcoeffs[k]
        return UniPoly.zero(self.field)

    def is_monic_in_t(self) -> bool:
        return bool(self.tcoeffs) and self.tcoeffs[-1].is_one()

    def require_monic(self, what="input"):
        from ..errors import PreconditionError

        if self.degree_t < 1 or not self.is_monic_in_t():
            raise PreconditionError(
                f"{what} must be monic in t of t-degree >= 1"
            )
        return self

    def deg_x(self) -> int:
        return max((c.degree for c in self.tcoeffs), default=-1)

    def total_degree(self) -> int:
        return max(
            (k + c.degree for k, c in enumerate(self.tcoeffs) if not c.is_zero()),
            default=-1,
        )

    def to_field(self, field) -> "BiPoly":
        if field == self.field:
            return self
        return BiPoly(self.tcoeffs, field)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.tcoeffs)

    def rational_part(self) -> "BiPoly":
        return BiPoly([c.rational_part() for c in self.tcoeffs], FIELD_Q)

    def conj(self) -> "BiPoly":
        return BiPoly([c.conj() for c in self.tcoeffs], self.field)

    # -- arithmetic (tests and discriminant bookkeeping) -------------------

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        f = _join_field(self.field, other.field)
        n = max(len(self.tcoeffs), len(other.tcoeffs))
        return BiPoly(
            [self.coeff(k) + other.coeff(k) for k in range(n)], f
        )

    def __neg__(self):
        return BiPoly([-c for c in self.tcoeffs], self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, UniPoly)):
            return BiPoly([c * other for c in self.tcoeffs], None)
        if not isinstance(other, BiPoly):
            return NotImplemented
        f = _join_field(self.field, other.field)
        if self.is_zero() or other.is_zero():
            return BiPoly((), f)
        out = [UniPoly.zero(f) for _ in range(len(self.tcoeffs) + len(other.tcoeffs) - 1)]
        for i, a in enumerate(self.tcoeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.tcoeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out, f)

    __rmul__ = __mul__

    def partial_t(self) -> "BiPoly":
        return BiPoly(
            [k * c for k, c in enumerate(self.tcoeffs)][1:], self.field
        )

    def partial_x(self) -> "BiPoly":
        return BiPoly([c.derivative() for c in self.tcoeffs], self.field)

    def eval_x(self, a) -> UniPoly:
        """f(a, t) as a UniPoly in t."""
        field = self.field
        if isinstance(a, GaussRational) and not a.is_rational():
            field = FIELD_QI
        return UniPoly(
            [c.to_field(field).evaluate(coerce_scalar(a, field)) for c in self.tcoeffs],
            field,
            "t",
        )

    def eval_point(self, a, t0):
        return self.eval_x(a).evaluate(t0)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        f = _join_field(self.field, other.field)
        return self.to_field(f).tcoeffs == other.to_field(f).tcoeffs

    def __hash__(self):
        return hash((self.tcoeffs, self.field))

    def __repr__(self):
        from .grammar import format_bipoly

        return f"BiPoly<{format_bipoly(self)}>"


class RatFunc:
    """num/den with den monic, reduced; internal plumbing for traces."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = UniPoly.one(num.field, num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        f = _join_field(num.field, den.field)
        num, den = num.to_field(f), den.to_field(f)
        if num.is_zero():
            den = UniPoly.one(f, num.var)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
            l = den.lc()
            if l != scalar_one(f):
                num = num * (scalar_one(f) / l)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def is_poly(self) -> bool:
        return self.den.is_one()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> UniPoly:
        if not self.is_poly():
            raise ValueError(f"not polynomial: denominator {self.den!r}")
        return self.num

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, UniPoly)):
            other = RatFunc(
                other if isinstance(other, UniPoly) else UniPoly.const(other, self.num.field)
            )
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, UniPoly)):
            other = RatFunc(
                other if isinstance(other, UniPoly) else UniPoly.const(other, self.num.field)
            )
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, UniPoly)):
            other = RatFunc(
                other if isinstance(other, UniPoly) else UniPoly.const(other, self.num.field)
            )
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den, self.den * other.num)

    def conj(self):
        return RatFunc(self.num.conj(), self.den.conj())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, UniPoly)):
            other = RatFunc(
                other if isinstance(other, UniPoly) else UniPoly.const(other, self.num.field)
            )
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"
