"""Polynomial text grammar.

Input: integer/rational coefficients, variables x t y z, imaginary unit i,
operators + - * ^, parentheses, and implicit multiplication by juxtaposition
("2xt", "ix^2", "1/2x").  '/' is restricted to integer/integer — rational
functions are never parsed from text.

Output: canonical strings — monomials sorted high degree first, t-major for
bivariate, z-then-x-then-y-major for ternary; rationals as "a/b"; Gaussian
coefficients as "(a+bi)" when both parts are present.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .gauss import FIELD_Q, FIELD_QI, GaussRational, as_gauss, format_fraction, format_scalar
from .poly import BiPoly, UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([xtyzi])|([+\-*/^()]))")

_VARS = ("x", "t", "y", "z")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} at position {pos}")
        if m.group(1) is not None:
            out.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            out.append(("var", m.group(2)))
        else:
            out.append(("op", m.group(3)))
        pos = m.end()
    return out


class _Parser:
    """Monomial-map parser: value is dict {(ex,et,ey,ez): GaussRational}."""

    def __init__(self, text):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else ("end", None)

    def next(self):
        t = self.peek()
        self.k += 1
        return t

    def parse(self):
        v = self.expr()
        kind, val = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input at token {self.k}: {val!r}")
        return v

    def expr(self):
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.next()
            acc = _neg(self.term())
        elif (kind, val) == ("op", "+"):
            self.next()
            acc = self.term()
        else:
            acc = self.term()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "+"):
                self.next()
                acc = _add(acc, self.term())
            elif (kind, val) == ("op", "-"):
                self.next()
                acc = _add(acc, _neg(self.term()))
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.next()
                acc = _mul(acc, self.factor())
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                acc = _mul(acc, self.factor())
            elif (kind, val) == ("op", "/"):
                raise ParseError(
                    "'/' is only allowed between integer literals (constant divisor)"
                )
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if (kind, val) == ("op", "^"):
            self.next()
            kind, val = self.next()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal")
            return _pow(base, val)
        return base

    def atom(self):
        kind, val = self.next()
        if kind == "num":
            q = Fraction(val)
            k2, v2 = self.peek()
            if (k2, v2) == ("op", "/"):
                self.next()
                k3, v3 = self.next()
                if k3 != "num" or v3 == 0:
                    raise ParseError("divisor must be a nonzero integer literal")
                q = Fraction(val, v3)
            return {(0, 0, 0, 0): GaussRational(q, 0)}
        if kind == "var":
            if val == "i":
                return {(0, 0, 0, 0): GaussRational(0, 1)}
            e = [0, 0, 0, 0]
            e[_VARS.index(val)] = 1
            return {tuple(e): GaussRational(1, 0)}
        if (kind, val) == ("op", "("):
            v = self.expr()
            kind, val = self.next()
            if (kind, val) != ("op", ")"):
                raise ParseError("unbalanced parenthesis")
            return v
        if (kind, val) == ("op", "-"):
            # unary minus directly inside a product position: -x^2 parses at
            # expr level; here it only appears after '(' handled above
            return _neg(self.factor())
        raise ParseError(f"unexpected token {val!r}")


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, GaussRational(0, 0)) + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _neg(a):
    return {k: -v for k, v in a.items()}


def _mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(ka[j] + kb[j] for j in range(4))
            s = out.get(k, GaussRational(0, 0)) + va * vb
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _pow(a, e):
    acc = {(0, 0, 0, 0): GaussRational(1, 0)}
    for _ in range(e):
        acc = _mul(acc, a)
    return acc


def parse_monomials(text: str) -> dict:
    """Raw monomial map {(ex,et,ey,ez): GaussRational}."""
    if not text or not text.strip():
        raise ParseError("empty input")
    return _Parser(text).parse()


def _field_of(mono: dict):
    return (
        FIELD_QI
        if any(not c.is_rational() for c in mono.values())
        else FIELD_Q
    )


def parse_bipoly(text: str) -> BiPoly:
    mono = parse_monomials(text)
    for (ex, et, ey, ez) in mono:
        if ey or ez:
            raise ParseError("bivariate input must use only x and t")
    field = _field_of(mono)
    nt = max((et for (_, et, _, _) in mono), default=0)
    nx = max((ex for (ex, _, _, _) in mono), default=0)
    tc = []
    for k in range(nt + 1):
        coeffs = [GaussRational(0, 0)] * (nx + 1)
        for (ex, et, _, _), c in mono.items():
            if et == k:
                coeffs[ex] = c
        tc.append(UniPoly(coeffs, field, "x"))
    return BiPoly(tc, field)


def parse_unipoly(text: str, var: str = "x") -> UniPoly:
    mono = parse_monomials(text)
    vi = _VARS.index(var)
    for key in mono:
        if any(key[j] for j in range(4) if j != vi):
            raise ParseError(f"expected a univariate polynomial in {var}")
    field = _field_of(mono)
    n = max((key[vi] for key in mono), default=0)
    coeffs = [GaussRational(0, 0)] * (n + 1)
    for key, c in mono.items():
        coeffs[key[vi]] = c
    return UniPoly(coeffs, field, var)


def parse_ternary_monomials(text: str) -> dict:
    """{(ex,ey,ez): GaussRational} for input in x, y, z."""
    mono = parse_monomials(text)
    out = {}
    for (ex, et, ey, ez), c in mono.items():
        if et:
            raise ParseError("ternary input must use x, y, z (t not allowed)")
        out[(ex, ey, ez)] = c
    return out


def parse_scalar(text: str) -> GaussRational:
    mono = parse_monomials(text)
    for key in mono:
        if any(key):
            raise ParseError("expected a constant")
    return mono.get((0, 0, 0, 0), GaussRational(0, 0))


def parse_fraction(text: str) -> Fraction:
    s = parse_scalar(text)
    if not s.is_rational():
        raise ParseError("expected a rational constant")
    return s.re


# -- canonical printing -------------------------------------------------------


def _coeff_parts(c, has_vars):
    """(sign, body) for one term; body omits a unit coefficient before vars."""
    c = as_gauss(c)
    if c.im == 0:
        sign = "-" if c.re < 0 else "+"
        a = abs(c.re)
        body = "" if (a == 1 and has_vars) else format_fraction(a)
        return sign, body
    if c.re == 0:
        sign = "-" if c.im < 0 else "+"
        a = abs(c.im)
        body = "i" if a == 1 else format_fraction(a) + "i"
        return sign, body
    return "+", "(" + format_scalar(c) + ")"


def _join_terms(terms):
    """terms: list of (coeff, varpart-string); canonical joined string."""
    if not terms:
        return "0"
    pieces = []
    for idx, (c, v) in enumerate(terms):
        sign, body = _coeff_parts(c, bool(v))
        s = body + v
        if idx == 0:
            pieces.append("-" + s if sign == "-" else s)
        else:
            pieces.append((" - " if sign == "-" else " + ") + s)
    return "".join(pieces)


def _var_power(var, k):
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def format_unipoly(p: UniPoly) -> str:
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not (c == 0 if not isinstance(c, GaussRational) else c.is_zero()):
            terms.append((c, _var_power(p.var, k)))
    return _join_terms(terms)


def format_bipoly(f: BiPoly) -> str:
    terms = []
    for k in range(f.degree_t, -1, -1):
        c = f.coeff(k)
        for j in range(c.degree, -1, -1):
            cj = c.coeff(j)
            zero = cj == 0 if not isinstance(cj, GaussRational) else cj.is_zero()
            if not zero:
                terms.append((cj, _var_power("x", j) + _var_power("t", k)))
    return _join_terms(terms)


def format_ternary(mono: dict) -> str:
    keys = sorted(mono, key=lambda k: (k[2], k[0], k[1]), reverse=True)
    terms = []
    for (ex, ey, ez) in keys:
        c = mono[(ex, ey, ez)]
        if not as_gauss(c).is_zero():
            terms.append(
                (c, _var_power("x", ex) + _var_power("y", ey) + _var_power("z", ez))
            )
    return _join_terms(terms)


def format_ratfunc(r) -> str:
    """num/den display for diagnostics (not re-parseable when den != 1)."""
    if r.den.is_one():
        return format_unipoly(r.num)
    return f"({format_unipoly(r.num)})/({format_unipoly(r.den)})"
