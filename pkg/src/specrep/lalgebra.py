"""Arithmetic in L = F(x)[t]/(f) for f monic in t: power-basis reduction,
power sums of the t-roots (Newton), traces, multiplication matrices.

Internal plumbing shared by certify, ideallat, traceform, represent.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import BiPoly, FIELD_Q, PolyMatrix, RatFunc, UniPoly


class QuotientAlgebra:
    """Cached reduction data for one ambient f."""

    def __init__(self, f: BiPoly):
        f.require_monic("ambient polynomial")
        self.f = f
        self.n = f.degree_t
        self.field = f.field
        # t^n = -(a_0 + a_1 t + ... + a_{n-1} t^{n-1})
        self._neg_tail = [-f.coeff(i) for i in range(self.n)]
        self._powers = self._power_table(max(2 * self.n - 1, self.n + 1))
        self._psums = None

    def _power_table(self, count):
        n = self.n
        zero = UniPoly.zero(self.field)
        one = UniPoly.one(self.field)
        rows = []
        for k in range(min(count, n)):
            rows.append([one if i == k else zero for i in range(n)])
        for k in range(n, count):
            prev = rows[k - 1]
            over = prev[n - 1]
            cur = [zero] + prev[: n - 1]
            if not over.is_zero():
                cur = [cur[i] + over * self._neg_tail[i] for i in range(n)]
            rows.append(cur)
        return rows

    def power_vector(self, k):
        """Coordinates of t̄^k in the power basis, k <= 2n-2."""
        return self._powers[k]

    def power_sums(self, upto=None):
        """[p_0, ..., p_m] Newton power sums of the t-roots, m = upto
        (default 2n-2); entries in F[x]."""
        m = 2 * self.n - 2 if upto is None else upto
        if self._psums is None or len(self._psums) <= m:
            n = self.n
            a = [self.f.coeff(i) for i in range(n + 1)]
            p = [UniPoly.const(n, self.field)]
            for k in range(1, m + 1):
                if k <= n:
                    acc = a[n - k] * (-k)
                    for j in range(1, k):
                        acc = acc - a[n - j] * p[k - j]
                else:
                    acc = UniPoly.zero(self.field)
                    for j in range(1, n + 1):
                        acc = acc - a[n - j] * p[k - j]
                p.append(acc)
            self._psums = p
        return self._psums[: m + 1]

    # -- polynomial-coordinate arithmetic (dense vectors over F[x]) --------

    def mul_vectors(self, a, b):
        """Product of two power-basis coordinate vectors with UniPoly entries."""
        n = self.n
        conv = [UniPoly.zero(self.field) for _ in range(2 * n - 1)]
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if not bj.is_zero():
                    conv[i + j] = conv[i + j] + ai * bj
        out = [UniPoly.zero(self.field) for _ in range(n)]
        for k in range(2 * n - 1):
            if conv[k].is_zero():
                continue
            pw = self._powers[k]
            out = [out[i] + conv[k] * pw[i] for i in range(n)]
        return out

    def shift_vector(self, a):
        """Coordinates of t̄ * (vector a)."""
        n = self.n
        over = a[n - 1]
        out = [UniPoly.zero(self.field)] + list(a[: n - 1])
        if not over.is_zero():
            out = [out[i] + over * self._neg_tail[i] for i in range(n)]
        return out

    def mult_matrix_of_vector(self, a) -> PolyMatrix:
        """Matrix of multiplication by the element with coordinates a (UniPoly
        entries) acting on the power basis; column j = a * t̄^j."""
        cols = [list(a)]
        for _ in range(1, self.n):
            cols.append(self.shift_vector(cols[-1]))
        return PolyMatrix(
            [[cols[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def companion(self) -> PolyMatrix:
        one = [UniPoly.one(self.field)] + [UniPoly.zero(self.field)] * (self.n - 1)
        return self.mult_matrix_of_vector(self.shift_vector(one))

    def trace_vector(self, a) -> UniPoly:
        """Trace of the element with UniPoly coordinates a."""
        ps = self.power_sums()
        acc = UniPoly.zero(self.field)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                acc = acc + ai * ps[i]
        return acc

    def reduce_tpoly(self, g: BiPoly) -> list:
        """Coordinates of g(x, t̄): remainder of g on division by f in t."""
        g = g.to_field(self.field)
        cs = [g.coeff(k) for k in range(g.degree_t + 1)]
        for k in range(len(cs) - 1, self.n - 1, -1):
            c = cs[k]
            if c.is_zero():
                continue
            cs[k] = UniPoly.zero(self.field)
            for i in range(self.n):
                cs[k - self.n + i] = cs[k - self.n + i] + c * self._neg_tail[i]
        cs = cs[: self.n]
        return cs + [UniPoly.zero(self.field)] * (self.n - len(cs))

    def element(self, coords, den=None) -> "LElement":
        return LElement(self, coords, den)

    def element_from_tpoly(self, tcoeffs) -> "LElement":
        """Element given by a t-polynomial of degree < n (BiPoly or a list of
        t-coefficients as UniPoly/RatFunc/consts)."""
        if isinstance(tcoeffs, BiPoly):
            if tcoeffs.degree_t >= self.n:
                return self.element(self.reduce_tpoly(tcoeffs))
            tcoeffs = list(tcoeffs.tcoeffs)
        coords = list(tcoeffs) + [UniPoly.zero(self.field)] * (self.n - len(tcoeffs))
        return LElement(self, coords)

    def one(self):
        return self.element_from_tpoly([UniPoly.one(self.field)])

    def tbar(self):
        return self.element_from_tpoly([UniPoly.zero(self.field), UniPoly.one(self.field)])


def _as_ratfunc(c, field):
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, UniPoly):
        return RatFunc(c)
    return RatFunc(UniPoly.const(c, field))


class LElement:
    """Element of L in power-basis coordinates (RatFunc entries)."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg: QuotientAlgebra, coords, den=None):
        cs = [_as_ratfunc(c, alg.field) for c in coords]
        if len(cs) != alg.n:
            raise ValueError(f"need {alg.n} coordinates, got {len(cs)}")
        if den is not None:
            dinv = RatFunc(UniPoly.one(alg.field), den if isinstance(den, UniPoly) else UniPoly.const(den, alg.field))
            cs = [c * dinv for c in cs]
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "coords", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LElement is immutable")

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        self._chk(other)
        return LElement(self.alg, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._chk(other)
        return LElement(self.alg, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return LElement(self.alg, [-a for a in self.coords])

    def _chk(self, other):
        if not isinstance(other, LElement) or other.alg.f != self.alg.f:
            raise ValueError("ambient mismatch")

    def __mul__(self, other):
        if isinstance(other, LElement):
            self._chk(other)
            num_a, den_a = self._clear()
            num_b, den_b = other._clear()
            prod = self.alg.mul_vectors(num_a, num_b)
            return LElement(self.alg, prod, den_a * den_b)
        rf = _as_ratfunc(other, self.alg.field)
        return LElement(self.alg, [c * rf for c in self.coords])

    __rmul__ = __mul__

    def _clear(self):
        """(UniPoly vector, common denominator UniPoly)."""
        from .exactalg import poly_lcm

        den = UniPoly.one(self.alg.field)
        for c in self.coords:
            den = poly_lcm(den, c.den)
        nums = [c.num * den.exact_div(c.den) for c in self.coords]
        return nums, den

    def clear_denominator(self):
        return self._clear()

    def conjugate(self) -> "LElement":
        return LElement(self.alg, [c.conj() for c in self.coords])

    def is_conj_fixed(self):
        return all(c.conj() == c for c in self.coords)

    def inverse(self) -> "LElement":
        """u^{-1} via the adjugate of the multiplication matrix."""
        nums, den = self._clear()
        M = self.alg.mult_matrix_of_vector(nums)
        det = M.det()
        if det.is_zero():
            raise ValueError("element is not invertible")
        adj = M.adjugate()
        col = [adj[i][0] for i in range(self.alg.n)]
        return LElement(self.alg, [RatFunc(c * den, det) for c in col])

    def trace(self) -> RatFunc:
        ps = self.alg.power_sums()
        acc = RatFunc(UniPoly.zero(self.alg.field))
        for i, c in enumerate(self.coords):
            if not c.is_zero():
                acc = acc + c * ps[i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, LElement):
            return NotImplemented
        return self.alg.f == other.alg.f and self.coords == other.coords

    def __hash__(self):
        return hash((self.alg.f, self.coords))

    def __repr__(self):
        from .exactalg import format_ratfunc

        body = ", ".join(format_ratfunc(c) for c in self.coords)
        return f"LElement[{body}]"
