"""Exact factorization over Q and root finding over Q(i).

squarefree_decompose is Yun's algorithm.  factor_over_Q is classical
Zassenhaus: reduce mod a good odd prime, Cantor-Zassenhaus there, Hensel
lift past the Mignotte bound, recombine subsets.  Degrees beyond 20 are
rejected up front; the pipeline never needs them.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .gauss import FIELD_Q, FIELD_QI, GaussRational, is_rational_square
from .poly import UniPoly, poly_gcd

FACTOR_DEGREE_CAP = 20


# -- squarefree decomposition (Yun) ---------------------------------------


def squarefree_decompose(f: UniPoly):
    """(unit, [(g_i, i), ...]) with f = unit * prod g_i^i, each g_i monic
    squarefree, pairwise coprime, i strictly increasing."""
    f = f.rational_part()
    if f.is_zero():
        raise ValueError("zero polynomial")
    unit = f.lc()
    f = f.monic()
    if f.degree == 0:
        return unit, []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    d = fp.exact_div(a) - b.derivative()
    out = []
    i = 1
    while not b.is_one():
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out.append((g, i))
        b = b.exact_div(g)
        d = d.exact_div(g) - b.derivative()
        i += 1
    return unit, out


def is_squarefree(f: UniPoly) -> bool:
    f = f.rational_part()
    if f.degree < 1:
        return not f.is_zero()
    return poly_gcd(f, f.derivative()).is_one()


# -- GF(p) polynomials: lists of ints, low degree first --------------------


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_add(a, b, p):
    n = max(len(a), len(b))
    return _gf_trim(
        [((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % p for k in range(n)]
    )


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    return _gf_trim(
        [((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % p for k in range(n)]
    )


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _gf_trim(out)


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and _gf_trim(a):
        if len(a) < len(b):
            break
        c = (a[-1] * inv) % p
        k = len(a) - len(b)
        q[k] = c
        for j, cb in enumerate(b):
            a[k + j] = (a[k + j] - c * cb) % p
        _gf_trim(a)
    return _gf_trim(q), _gf_trim(a)


def _gf_mod(a, b, p):
    return _gf_divmod(a, b, p)[1]


def _gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_mod(a, b, p)
    return _gf_monic(a, p)


def _gf_xgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = [(c * inv) % p for c in r0]
        s0 = [(c * inv) % p for c in s0]
        t0 = [(c * inv) % p for c in t0]
    return r0, s0, t0


def _gf_powmod(a, e, f, p):
    r = [1]
    a = _gf_mod(a, f, p)
    while e:
        if e & 1:
            r = _gf_mod(_gf_mul(r, a, p), f, p)
        a = _gf_mod(_gf_mul(a, a, p), f, p)
        e >>= 1
    return r


def _gf_deriv(a, p):
    return _gf_trim([(k * c) % p for k, c in enumerate(a)][1:])


def _gf_ddf(f, p):
    """Distinct-degree split of monic squarefree f: [(product, degree)]."""
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_powmod(h, p, f, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = _gf_divmod(f, g, p)[0]
            h = _gf_mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _gf_edf(f, d, p, rng):
    """Cantor-Zassenhaus equal-degree split (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = _gf_trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        b = _gf_powmod(a, e, f, p)
        g = _gf_gcd(_gf_sub(b, [1], p), f, p)
        if 1 < len(g) < len(f):
            rest = _gf_divmod(f, g, p)[0]
            return _gf_edf(g, d, p, rng) + _gf_edf(rest, d, p, rng)


def _gf_factor_squarefree(f, p, rng):
    out = []
    for g, d in _gf_ddf(f, p):
        out.extend(_gf_edf(g, d, p, rng))
    out.sort(key=lambda a: (len(a), tuple(a)))
    return out


# -- integer polynomials and Hensel lifting --------------------------------


def _z_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _z_trim(out)


def _z_sub(a, b):
    n = max(len(a), len(b))
    return _z_trim(
        [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]
    )


def _z_divmod_monic(a, b):
    """Divide by monic b over Z."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c:
            q[k] = c
            for j, cb in enumerate(b):
                a[k + j] -= c * cb
    return _z_trim(q), _z_trim(a)


def _zm_red(a, m):
    return _z_trim([c % m for c in a])


def _zm_mul(a, b, m):
    return _zm_red(_z_mul(a, b), m)


def _zm_sub(a, b, m):
    return _zm_red(_z_sub(a, b), m)


def _zm_add(a, b, m):
    n = max(len(a), len(b))
    return _z_trim(
        [((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % m for k in range(n)]
    )


def _zm_divmod_monic(a, b, m):
    a = [c % m for c in a]
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] % m
        if c:
            q[k] = c
            for j, cb in enumerate(b):
                a[k + j] = (a[k + j] - c * cb) % m
    return _z_trim(q), _z_trim([c % m for c in a])


def _symmetric(a, m):
    h = m // 2
    return _z_trim([((c + h) % m) - h for c in a])


def _hensel_step(f, g, h, s, t, m):
    """One quadratic step: inputs valid mod m, outputs valid mod m*m.
    f monic over Z, g,h monic, f = g*h and s*g + t*h = 1 (mod m)."""
    m2 = m * m
    e = _zm_red(_z_sub(f, _z_mul(g, h)), m2)
    q, r = _zm_divmod_monic(_zm_mul(s, e, m2), h, m2)
    g2 = _zm_add(_zm_add(g, _zm_mul(t, e, m2), m2), _zm_mul(q, g, m2), m2)
    h2 = _zm_add(h, r, m2)
    b = _zm_sub(_zm_add(_zm_mul(s, g2, m2), _zm_mul(t, h2, m2), m2), [1], m2)
    c, d = _zm_divmod_monic(_zm_mul(s, b, m2), h2, m2)
    s2 = _zm_sub(s, d, m2)
    t2 = _zm_sub(t, _zm_add(_zm_mul(t, b, m2), _zm_mul(c, g2, m2), m2), m2)
    return g2, h2, s2, t2


def _hensel_pair(f, g0, h0, p, target):
    """Lift f = g0*h0 (mod p) to mod p^k >= target; returns (g, h, modulus)."""
    _, s, t = _gf_xgcd(g0, h0, p)
    g, h = list(g0), list(h0)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return g, h, m


def _lift_factors(f, facs, p, target):
    """Hensel-lift the mod-p factorization of monic integer f past target.
    Divide and conquer on the factor list; returns factors mod p^k >= target."""
    if len(facs) == 1:
        return [f]
    half = len(facs) // 2
    g0 = [1]
    for a in facs[:half]:
        g0 = _gf_mul(g0, a, p)
    h0 = [1]
    for a in facs[half:]:
        h0 = _gf_mul(h0, a, p)
    g, h, _ = _hensel_pair(f, g0, h0, p, target)
    return _lift_factors(g, facs[:half], p, target) + _lift_factors(
        h, facs[half:], p, target
    )


def _next_prime(n: int) -> int:
    n += 1
    while True:
        if n >= 2 and all(n % q for q in range(2, math.isqrt(n) + 1)):
            return n
        n += 1


def _factor_monic_int(f_int) -> list:
    """Zassenhaus on a monic squarefree integer polynomial; returns monic
    integer irreducible factors, sorted."""
    n = len(f_int) - 1
    if n <= 1:
        return [list(f_int)]
    # good prime: odd, keeps f squarefree mod p
    p = 2
    while True:
        p = _next_prime(p)
        fp = _z_trim([c % p for c in f_int])
        if len(fp) - 1 != n:
            continue  # cannot happen for monic f, kept for clarity
        if len(_gf_gcd(fp, _gf_deriv(fp, p), p)) == 1:
            break
    rng = random.Random(0x5EED ^ p)
    mod_facs = _gf_factor_squarefree(_gf_monic(fp, p), p, rng)
    if len(mod_facs) == 1:
        return [list(f_int)]
    # Mignotte: any monic factor has |coeff| <= 2^n * sqrt(n+1) * max|f|
    A = max(abs(c) for c in f_int)
    B = (2**n) * (math.isqrt(n + 1) + 1) * A
    target = 2 * B + 1
    lifted = _lift_factors(list(f_int), mod_facs, p, target)
    modulus = p
    while modulus < target:
        modulus *= modulus

    out = []
    rem = list(f_int)
    avail = list(range(len(lifted)))
    size = 1
    while avail and size <= len(avail):
        hit = False
        for combo in itertools.combinations(avail, size):
            cand = [1]
            for i in combo:
                cand = _zm_mul(cand, lifted[i], modulus)
            cand = _symmetric(cand, modulus)
            q, r = _z_divmod_monic(rem, cand)
            if not r:
                out.append(cand)
                rem = q
                avail = [i for i in avail if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if len(rem) > 1:
        out.append(rem)
    out.sort(key=lambda a: (len(a), tuple(a)))
    return out


def _factor_squarefree_monic_q(g: UniPoly) -> list:
    """Monic squarefree rational -> sorted monic rational irreducibles."""
    if g.degree <= 1:
        return [g]
    if g.degree > FACTOR_DEGREE_CAP:
        raise ValueError(
            f"factorization implemented for degree <= {FACTOR_DEGREE_CAP}, got {g.degree}"
        )
    den = math.lcm(*(c.denominator for c in g.coeffs))
    F = [int(c * den) for c in g.coeffs]  # lc = den
    ell = F[-1]
    # monicize: Fhat(x) = ell^(n-1) * F(x/ell)
    nn = len(F) - 1
    Fhat = [F[k] * ell ** (nn - 1 - k) for k in range(nn)] + [1]
    parts = _factor_monic_int(Fhat)
    out = []
    for h in parts:
        dh = len(h) - 1
        # undo: h(ell*x) made monic over Q
        coeffs = [Fraction(h[k] * ell**k, ell**dh) for k in range(len(h))]
        out.append(UniPoly(coeffs, FIELD_Q, g.var))
    out.sort(key=lambda u: (u.degree, u.coeffs))
    return out


def factor_over_Q(f: UniPoly):
    """(unit, [(irreducible monic, multiplicity)]) over Q, deterministic order."""
    unit, sqf = squarefree_decompose(f)
    out = []
    for g, i in sqf:
        for h in _factor_squarefree_monic_q(g):
            out.append((h, i))
    out.sort(key=lambda hm: (hm[0].degree, hm[0].coeffs, hm[1]))
    return unit, out


def rational_roots(f: UniPoly):
    """[(root, multiplicity)] over Q, sorted."""
    _, facs = factor_over_Q(f)
    out = [(-h.coeff(0), m) for h, m in facs if h.degree == 1]
    out.sort()
    return out


def gaussian_roots(f: UniPoly):
    """All roots of f in Q(i) with multiplicities.

    Rational input: degree-1 factors give rational roots; a degree-2 factor
    x^2+bx+c contributes iff its discriminant is -d^2 (then roots are
    (-b +- d*i)/2); higher-degree irreducibles have no Q(i) roots since a
    Gaussian rational has degree at most 2 over Q.  Gaussian input: candidates
    come from the rational norm polynomial f * conj(f), then are verified.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.is_rational():
        fr = f.rational_part()
        _, facs = factor_over_Q(fr)
        out = []
        for h, m in facs:
            if h.degree == 1:
                r = -h.coeff(0)
                out.append((GaussRational(r, 0), m))
            elif h.degree == 2:
                b, c = h.coeff(1), h.coeff(0)
                disc = b * b - 4 * c
                if disc < 0:
                    d = is_rational_square(-disc)
                    if d is not None:
                        out.append((GaussRational(-b / 2, d / 2), m))
                        out.append((GaussRational(-b / 2, -d / 2), m))
                elif disc > 0:
                    pass  # real quadratic surd, not in Q(i)
        out.sort(key=lambda rm: (rm[0].re, rm[0].im))
        return out

    norm = (f * f.conj()).rational_part()
    out = []
    x = UniPoly.x(FIELD_QI, f.var)
    for r, _ in gaussian_roots(norm):
        if f.evaluate(r).is_zero():
            mult = 0
            q = f.to_field(FIELD_QI)
            while q.degree >= 1 and q.evaluate(r).is_zero():
                q = q.exact_div(x - r)
                mult += 1
            if mult:
                out.append((r, mult))
    out.sort(key=lambda rm: (rm[0].re, rm[0].im))
    return out
