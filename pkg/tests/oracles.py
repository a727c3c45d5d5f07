"""Fraction-land recomputations the suite pins library results against:
Sturm counts, cofactor determinants, Newton power sums, congruence
signatures, two-squares decompositions.  Deliberately naive and separate
from the package's own algorithms.

Polynomials here are plain ascending lists of Fractions.
"""

from fractions import Fraction

from specrep.exactalg import (
    UniPoly,
    as_gauss,
    factor_over_Q,
    is_rational_square,
)


# ---------------------------------------------------------------- poly lists


def trim(cs):
    cs = [Fraction(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def deg(cs):
    return len(trim(cs)) - 1


def padd(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return trim([x + y for x, y in zip(a, b)])


def pneg(a):
    return [-x for x in a]


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def pdivmod(a, b):
    a, b = trim(a), trim(b)
    assert b, "division by zero polynomial"
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[k + i] -= c * y
        r = trim(r)
        if not r:
            break
    return trim(q), r


def pderiv(a):
    return trim([Fraction(k) * c for k, c in enumerate(a)][1:])


def pgcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def peval(a, v):
    v = Fraction(v)
    acc = Fraction(0)
    for c in reversed(trim(a)):
        acc = acc * v + c
    return acc


def from_unipoly(p: UniPoly):
    """Ascending Fraction coefficients of a rational-coefficient UniPoly."""
    out = []
    for c in p.coeffs:
        g = as_gauss(c)
        assert g.is_rational(), "oracle expects rational coefficients"
        out.append(g.re)
    return trim(out)


def bipoly_at(f, a):
    """Fraction coefficients (in t) of f(a, t) for a bivariate f."""
    a = Fraction(a)
    return trim([peval(from_unipoly(f.coeff(k)), a) for k in range(f.degree_t + 1)])


# ------------------------------------------------------------ Sturm counting


def _sturm_seq(cs):
    p0, p1 = trim(cs), pderiv(cs)
    seq = [p0]
    while p1:
        seq.append(p1)
        p0, p1 = p1, pneg(pdivmod(p0, p1)[1])
    return seq


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u * v < 0)


def count_real_roots(cs):
    """Number of distinct real roots, whole line."""
    cs = trim(cs)
    assert cs, "zero polynomial"
    if len(cs) == 1:
        return 0
    seq = _sturm_seq(cs)
    at_minus = [(1 if p[-1] > 0 else -1) * (-1) ** (len(p) - 1) for p in seq]
    at_plus = [1 if p[-1] > 0 else -1 for p in seq]
    return _variations(at_minus) - _variations(at_plus)


def squarefree(cs):
    cs = trim(cs)
    d = pgcd(cs, pderiv(cs))
    return pdivmod(cs, d)[0] if len(d) > 1 else cs


def real_rooted(cs):
    """All complex roots real (with multiplicity)."""
    sf = squarefree(cs)
    return count_real_roots(sf) == len(sf) - 1


# -------------------------------------------------------- power sums / dets


def newton_power_sums(monic_cs, upto):
    """p_0..p_upto for the roots of a monic polynomial, by Newton's
    identities on e_i = (-1)^i c_{n-i}."""
    cs = trim(monic_cs)
    n = len(cs) - 1
    assert cs[-1] == 1
    e = [(-1) ** i * cs[n - i] for i in range(n + 1)]
    ps = [Fraction(n)]
    for k in range(1, upto + 1):
        if k <= n:
            s = sum(
                (-1) ** (i - 1) * e[i] * ps[k - i] for i in range(1, k)
            ) + (-1) ** (k - 1) * k * e[k]
        else:
            s = sum((-1) ** (i - 1) * e[i] * ps[k - i] for i in range(1, n + 1))
        ps.append(Fraction(s))
    return ps


def det_fractions(rows):
    """Exact determinant of a square Fraction matrix, plain elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            c = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= c * a[k][j]
    return det


def naive_det(rows):
    """Cofactor expansion; entries may be any ring elements with +,-,*."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * naive_det(minor)
        if total is None:
            total = term if j % 2 == 0 else -term
        else:
            total = total + term if j % 2 == 0 else total - term
    return total


# ------------------------------------------------------ constant signatures


def signature(rows):
    """(pos, neg) of a symmetric Fraction matrix by congruence pivoting."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue  # row is entirely zero: rank drop
                for i in range(n):
                    a[k][i] += a[j][i]
                for i in range(n):
                    a[i][k] += a[i][j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            c = a[i][k] / p
            for j in range(k, n):
                a[i][j] -= c * a[k][j]
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
    return pos, neg


def hermitian_signature(rows):
    """(pos, neg) of a constant Hermitian matrix with Gaussian-rational
    entries, via the symmetric realification [[Re, -Im], [Im, Re]]."""
    g = [[as_gauss(x) for x in row] for row in rows]
    n = len(g)
    big = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            big[i][j] = g[i][j].re
            big[i][n + j] = -g[i][j].im
            big[n + i][j] = g[i][j].im
            big[n + i][n + j] = g[i][j].re
    pos, neg = signature(big)
    assert pos % 2 == 0 and neg % 2 == 0
    return pos // 2, neg // 2


# ------------------------------------------------------------- two squares


def two_squares_rational(c):
    """(u, v) with u^2 + v^2 == c for a nonnegative rational, else None."""
    c = Fraction(c)
    if c < 0:
        return None
    if c == 0:
        return Fraction(0), Fraction(0)
    N = c.numerator * c.denominator
    re, im = 1, 0
    scale = 1
    n, p = N, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            if p == 2:
                for _ in range(e):
                    re, im = re - im, re + im  # multiply by 1+i
            elif p % 4 == 1:
                a = next(a for a in range(1, p) if is_rational_square(p - a * a))
                b = int(is_rational_square(p - a * a))
                for _ in range(e):
                    re, im = re * a - im * b, re * b + im * a
            else:
                if e % 2:
                    return None
                scale *= p ** (e // 2)
        p += 1
    if n > 1:  # leftover prime
        if n % 4 == 3:
            return None
        if n == 2:
            re, im = re - im, re + im
        else:
            a = next(a for a in range(1, n) if is_rational_square(n - a * a))
            b = int(is_rational_square(n - a * a))
            re, im = re * a - im * b, re * b + im * a
    u = Fraction(abs(re) * scale, c.denominator)
    v = Fraction(abs(im) * scale, c.denominator)
    assert u * u + v * v == c
    return u, v


def two_squares_poly(q: UniPoly):
    """(A, B) in Q[x]^2 with A^2 + B^2 == q, or None when no such pair
    exists.  Norm recombination over the factorization of q; irreducible
    factors of degree > 2 are out of scope for the corpus."""
    q = q.rational_part()
    if q.is_zero():
        return UniPoly.zero(), UniPoly.zero()
    unit, facs = factor_over_Q(q)
    A, B = UniPoly.one(), UniPoly.zero()
    s = UniPoly.one()
    for p, e in facs:
        if p.degree >= 3:
            raise ValueError("corpus restricts two-squares checks to quadratics")
        if p.degree == 1:
            if e % 2:
                return None
            s = s * p ** (e // 2)
            continue
        b = as_gauss(p.coeff(1)).re
        c = as_gauss(p.coeff(0)).re
        d2 = -(b * b - 4 * c)
        d = is_rational_square(d2)
        if d2 <= 0 or d is None:
            if e % 2:
                return None
            s = s * p ** (e // 2)
            continue
        re = UniPoly([b / 2, Fraction(1)])  # x + b/2
        im = UniPoly.const(d / 2)
        for _ in range(e):
            A, B = A * re - B * im, A * im + B * re
    uv = two_squares_rational(unit)
    if uv is None:
        return None
    u, v = uv
    A, B = A * UniPoly.const(u) - B * UniPoly.const(v), A * UniPoly.const(
        v
    ) + B * UniPoly.const(u)
    A, B = s * A, s * B
    assert A * A + B * B == q
    return A, B
