"""Real-root machinery over Q: Sturm chains, root isolation, exact
sign-on-the-line predicates, and negative-value witnesses.

Everything here is exact; inputs must live over field Q.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import UniPoly, poly_gcd


def _require_q(p: UniPoly) -> UniPoly:
    return p.rational_part()


def _primitive_posscale(p: UniPoly) -> UniPoly:
    """Scale by a positive rational to coprime integer coefficients.

    Sign variations are invariant under positive scaling, so Sturm chains may
    normalize each member this way to stop coefficient blowup.
    """
    if p.is_zero():
        return p
    from math import gcd, lcm

    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return UniPoly([Fraction(v, g) for v in ints], p.field, p.var)


def sturm_chain(p: UniPoly):
    """Sturm sequence p, p', -rem, ... with positive-primitive normalization;
    counts distinct roots."""
    p = _require_q(p)
    chain = [_primitive_posscale(p)]
    if p.degree >= 1:
        chain.append(_primitive_posscale(p.derivative()))
        while True:
            r = chain[-2] % chain[-1]
            if r.is_zero():
                break
            chain.append(_primitive_posscale(-r))
    return chain


def _variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_variations_at(chain, a: Fraction) -> int:
    return _variations([q.evaluate(a) for q in chain])


def count_roots_interval(chain, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b]; endpoints must not be roots of chain[0]."""
    return sign_variations_at(chain, a) - sign_variations_at(chain, b)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: every real root r has |r| < bound."""
    p = _require_q(p)
    if p.degree < 1:
        return Fraction(1)
    lc = p.lc()
    return 1 + max(abs(c / lc) for c in p.coeffs[:-1])


def sturm_count(p: UniPoly) -> int:
    """Number of distinct real roots; rejects the zero polynomial."""
    p = _require_q(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    b = root_bound(p)
    return count_roots_interval(chain, -b, b)


def _nonroot_between(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    # binary-search a point in (lo, hi) that is not a root; p has finitely many
    step = (hi - lo) / 2
    while True:
        m = lo + step
        if p.evaluate(m) != 0:
            return m
        step = step / 2


def isolate_real_roots(p: UniPoly):
    """Disjoint open rational intervals (a, b), sorted, one distinct real root
    each; endpoints are never roots of p."""
    p = _require_q(p)
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    b = root_bound(p)
    out = []
    stack = [(-b, b, count_roots_interval(chain, -b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        m = _nonroot_between(p, lo, hi)
        nl = count_roots_interval(chain, lo, m)
        stack.append((m, hi, n - nl))
        stack.append((lo, m, nl))
    out.sort()
    return out


def refine_interval(p: UniPoly, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink an isolating interval of p below the given width by bisection."""
    p = _require_q(p)
    chain = sturm_chain(p)
    while hi - lo >= width:
        m = _nonroot_between(p, lo, hi)
        if count_roots_interval(chain, lo, m) == 1:
            hi = m
        else:
            lo = m
    return lo, hi


def squarefree_part(p: UniPoly) -> UniPoly:
    p = _require_q(p)
    if p.degree < 1:
        return p.monic() if not p.is_zero() else p
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def sample_points_of_components(p: UniPoly):
    """One rational point in every connected component of R minus the real
    roots of p.  Complete: each maximal root-free open interval is hit."""
    p = _require_q(p)
    if p.is_zero():
        raise ValueError("zero polynomial has no root-free components")
    g = squarefree_part(p)
    intervals = isolate_real_roots(g)
    if not intervals:
        return [Fraction(0)]
    pts = [intervals[0][0]]
    pts.extend(hi for _, hi in intervals)
    return pts


def nonneg_on_R(p: UniPoly) -> bool:
    """Exact test: p(x) >= 0 for every real x."""
    p = _require_q(p)
    if p.is_zero():
        return True
    if p.degree == 0:
        return p.coeff(0) >= 0
    if p.degree % 2 == 1 or p.lc() < 0:
        return False
    # sign change across a root <=> odd multiplicity there
    for lo, hi in isolate_real_roots(squarefree_part(p)):
        if (p.evaluate(lo) > 0) != (p.evaluate(hi) > 0):
            return False
    return True


def positive_on_R(p: UniPoly) -> bool:
    """Exact test: p(x) > 0 for every real x."""
    p = _require_q(p)
    if p.is_zero():
        return False
    return nonneg_on_R(p) and sturm_count(p) == 0


def find_negative_point(p: UniPoly):
    """A rational x0 with p(x0) < 0, or None when p is nonnegative on R.

    Samples one point per root-free component, which is exhaustive: p has
    constant sign on each component.
    """
    p = _require_q(p)
    if p.is_zero():
        return None
    for x0 in sample_points_of_components(p):
        if p.evaluate(x0) < 0:
            return x0
    return None
