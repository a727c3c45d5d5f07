"""Hyperbolic ternary forms to definite determinantal pencils: normalize the
direction to (0,0,1), dehomogenize at y = 1, build a spectral representation
of the curve, enforce the entry-degree bound, and rehomogenize to
L = Ax + By + Cz with L(e) positive definite and det L = F.

The F(e) rescaling is carried as one scalar n-th root multiplying the whole
pencil: folded into the entries when it is rational or a plain square root,
kept symbolic otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import InternalCheckFailed, NotHyperbolic, PreconditionError
from .exactalg import (
    BiPoly,
    FIELD_Q,
    GaussRational,
    PolyMatrix,
    RadScalar,
    UniPoly,
    as_gauss,
    scalar_det,
)
from .exactalg.grammar import format_ternary, parse_ternary_monomials
from .ideallat import NOT_FOUND
from .represent import (
    SpectralRep,
    block_compose,
    hermitian_representation,
    symmetric_representation_search,
)


class TernaryForm:
    """Homogeneous F in Q[x,y,z] with an optional distinguished rational
    direction e; coefficients are stored as {(i,j,k): Fraction}."""

    __slots__ = ("coeffs", "degree", "e")

    def __init__(self, coeffs, e=None):
        if isinstance(coeffs, TernaryForm):
            coeffs, e = coeffs.coeffs, e if e is not None else coeffs.e
        if isinstance(coeffs, str):
            coeffs = parse_ternary_monomials(coeffs)
        clean = {}
        for key, c in coeffs.items():
            g = as_gauss(c)
            if g.is_zero():
                continue
            if not g.is_rational():
                raise PreconditionError("ternary form must have rational coefficients")
            i, j, k = key
            clean[(int(i), int(j), int(k))] = g.re
        if not clean:
            raise PreconditionError("zero form is not supported")
        degs = {sum(k) for k in clean}
        if len(degs) != 1:
            raise PreconditionError(
                f"form is not homogeneous: total degrees {sorted(degs)}"
            )
        if e is not None:
            e = tuple(Fraction(v) for v in e)
            if len(e) != 3:
                raise PreconditionError("direction must have three coordinates")
        object.__setattr__(self, "coeffs", dict(clean))
        object.__setattr__(self, "degree", degs.pop())
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryForm is immutable")

    def with_direction(self, e) -> "TernaryForm":
        return TernaryForm(self.coeffs, e)

    def evaluate(self, v) -> Fraction:
        v = tuple(Fraction(c) for c in v)
        acc = Fraction(0)
        for (i, j, k), c in self.coeffs.items():
            acc += c * v[0] ** i * v[1] ** j * v[2] ** k
        return acc

    def scaled(self, s) -> "TernaryForm":
        s = Fraction(s)
        return TernaryForm({k: c * s for k, c in self.coeffs.items()}, self.e)

    def substitute(self, A) -> "TernaryForm":
        """F(A·v) for a rational 3x3 matrix A (rows of coefficients)."""
        lin = [
            {(1, 0, 0): A[r][0], (0, 1, 0): A[r][1], (0, 0, 1): A[r][2]}
            for r in range(3)
        ]
        out = {}
        for (i, j, k), c in self.coeffs.items():
            term = {(0, 0, 0): c}
            for r, power in ((0, i), (1, j), (2, k)):
                for _ in range(power):
                    term = _tri_mul(term, lin[r])
            for key, v in term.items():
                out[key] = out.get(key, Fraction(0)) + v
        return TernaryForm({k: v for k, v in out.items() if v != 0})

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return TernaryForm(_tri_mul(self.coeffs, other.coeffs))

    def __eq__(self, other):
        return isinstance(other, TernaryForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        return format_ternary(self.coeffs)

    def __repr__(self):
        return f"TernaryForm({self})"


def _tri_mul(a: dict, b: dict) -> dict:
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2])
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def _det3(A) -> Fraction:
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def _inv3(A):
    d = _det3(A)
    if d == 0:
        raise ValueError("singular change of variables")
    cof = [
        [
            (A[(r + 1) % 3][(c + 1) % 3] * A[(r + 2) % 3][(c + 2) % 3]
             - A[(r + 1) % 3][(c + 2) % 3] * A[(r + 2) % 3][(c + 1) % 3])
            for c in range(3)
        ]
        for r in range(3)
    ]
    # adjugate = transpose of cofactors (the cyclic trick already signs them)
    return tuple(tuple(cof[c][r] / d for c in range(3)) for r in range(3))


def normalize_direction(form: TernaryForm, e=None):
    """(F', U): F' = F∘U⁻¹ / F(e) has F'(0,0,1) = 1, and U·e = (0,0,1).
    U⁻¹ keeps the two smallest standard basis vectors that complete e to a
    basis, so U is rational and deterministic."""
    if not isinstance(form, TernaryForm):
        form = TernaryForm(form)
    if e is None:
        e = form.e
    if e is None:
        raise PreconditionError("no direction given")
    e = tuple(Fraction(v) for v in e)
    fe = form.evaluate(e)
    if fe == 0:
        raise PreconditionError("form vanishes at the direction: F(e) = 0")
    pick = None
    for i in range(3):
        for j in range(i + 1, 3):
            cols = (_unit(i), _unit(j), e)
            Minv = tuple(tuple(cols[c][r] for c in range(3)) for r in range(3))
            if _det3(Minv) != 0:
                pick = Minv
                break
        if pick:
            break
    U = _inv3(pick)
    prime = form.substitute(pick).scaled(Fraction(1) / fe).with_direction((0, 0, 1))
    if prime.evaluate((0, 0, 1)) != 1:
        raise InternalCheckFailed("normalization did not fix the direction value")
    return prime, U


def _unit(i):
    return tuple(Fraction(1) if r == i else Fraction(0) for r in range(3))


def dehomogenize(form: TernaryForm) -> BiPoly:
    """f(x,t) = F(x,1,t); monic of degree n in t exactly when F(0,0,1) = 1."""
    n = form.degree
    tcs = []
    for k in range(n + 1):
        cs = [Fraction(0)] * (n - k + 1)
        for i in range(n - k + 1):
            cs[i] = form.coeffs.get((i, n - i - k, k), Fraction(0))
        tcs.append(UniPoly(tuple(cs), FIELD_Q))
    f = BiPoly(tuple(tcs), FIELD_Q)
    if f.degree_t != n or f.coeff(n) != UniPoly.one(FIELD_Q):
        raise PreconditionError(
            "dehomogenization is not monic in t; normalize the direction first"
        )
    return f


def degree_valuation(M: PolyMatrix) -> int:
    """v(M) = -max entry degree for the degree valuation on F(x)."""
    top = max(e.degree for row in M.rows for e in row)
    if top < 0:
        raise ValueError("zero matrix has no valuation")
    return -top


def check_degree_bound(M: PolyMatrix, f: BiPoly) -> bool:
    """v(M) = min over nonzero a_i of -deg(a_i)/(n-i), f = t^n + Σ a_i t^i.
    For total-degree-n f this pins every entry of M to degree at most 1."""
    n = f.degree_t
    idxs = [i for i in range(n) if not f.coeff(i).is_zero()]
    zero = all(e.is_zero() for row in M.rows for e in row)
    if zero and not idxs:
        return True
    if zero or not idxs:
        return False
    rhs = min(Fraction(-f.coeff(i).degree, n - i) for i in idxs)
    return Fraction(degree_valuation(M)) == rhs


@dataclass(frozen=True)
class Pencil:
    """L = Ax + By + Cz with det L = F and L(e) ≻ 0; `scale` is a pending
    (base)^(1/root) multiplier on every entry, (1, 1) when already folded in."""

    kind: str
    n: int
    A: Tuple[Tuple[RadScalar, ...], ...]
    B: Tuple[Tuple[RadScalar, ...], ...]
    C: Tuple[Tuple[RadScalar, ...], ...]
    e: Tuple[Fraction, Fraction, Fraction]
    scale: Tuple[Fraction, int]
    rep: SpectralRep
    U: Tuple[Tuple[Fraction, ...], ...]
    form: TernaryForm
    factors: Optional[Tuple[TernaryForm, ...]] = None

    def evaluate(self, v):
        """L(v) entrywise in RadScalar arithmetic (scale not applied)."""
        v = tuple(Fraction(c) for c in v)
        return tuple(
            tuple(
                self.A[i][j] * v[0] + self.B[i][j] * v[1] + self.C[i][j] * v[2]
                for j in range(self.n)
            )
            for i in range(self.n)
        )

    def as_json(self):
        out = {
            "kind": self.kind,
            "n": self.n,
            "A": [[s.as_json() for s in row] for row in self.A],
            "B": [[s.as_json() for s in row] for row in self.B],
            "C": [[s.as_json() for s in row] for row in self.C],
            "e": [str(c) for c in self.e],
            "scale": {"base": str(self.scale[0]), "root": self.scale[1]},
            "form": str(self.form),
            "witness": {
                "U": [[str(c) for c in row] for row in self.U],
                "rep": self.rep.as_json(),
            },
        }
        if self.factors is not None:
            out["factors"] = [str(p) for p in self.factors]
        return out


def _nth_root_rational(q: Fraction, n: int) -> Optional[Fraction]:
    if n == 1:
        return q
    if q <= 0:
        return None

    def iroot(m: int) -> Optional[int]:
        r = round(m ** (1.0 / n))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**n == m:
                return cand
        return None

    a, b = iroot(q.numerator), iroot(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _fold_scale(fe: Fraction, n: int) -> Optional[RadScalar]:
    """F(e)^{1/n} as a RadScalar when that is exact: rational n-th root, or a
    square root for n = 2 (and 2k-th roots that happen to be square roots)."""
    r = _nth_root_rational(fe, n)
    if r is not None:
        return RadScalar.rational(r)
    if n % 2 == 0:
        half = _nth_root_rational(fe, n // 2)
        if half is not None:
            return RadScalar.sqrt(half)
    return None


def _rep_for(f: BiPoly, kind: str, bound):
    if kind == "hermitian":
        return hermitian_representation(f)
    if kind == "symmetric":
        return symmetric_representation_search(f, bound)
    raise ValueError(f"unknown kind {kind!r}")


def _enforce_degree_bound(rep: SpectralRep, f: BiPoly):
    if not check_degree_bound(rep.N, f):
        raise InternalCheckFailed("valuation of the representing matrix is off")
    top = max(e.degree for row in rep.N.rows for e in row)
    if top > 1:
        raise InternalCheckFailed(
            "representing matrix has nonlinear entries on a total-degree-n input"
        )


def _grid_verify(rep: SpectralRep, prime: TernaryForm):
    """det(Iz - N₀y - N₁x) = F' exactly, checked on an (n+1)×(n+1) integer
    grid at z = 1 — enough points to pin both sides as polynomials, and
    radical-free because similarity by D^{1/2} cancels in the determinant."""
    n = rep.n
    N0 = [[as_gauss(rep.N[i][j].coeff(0)) for j in range(n)] for i in range(n)]
    N1 = [[as_gauss(rep.N[i][j].coeff(1)) for j in range(n)] for i in range(n)]
    one = GaussRational(1)
    for x0 in range(n + 1):
        for y0 in range(n + 1):
            rows = [
                [
                    (one if i == j else GaussRational(0))
                    - N0[i][j] * y0
                    - N1[i][j] * x0
                    for j in range(n)
                ]
                for i in range(n)
            ]
            lhs = scalar_det(rows)
            rhs = prime.evaluate((x0, y0, 1))
            if lhs != as_gauss(rhs):
                raise InternalCheckFailed(
                    f"pencil determinant disagrees with the form at ({x0},{y0},1)"
                )


def hv_representation(F, kind: str = "hermitian", e=None, factors=None, bound=None):
    """Definite pencil L = Ax+By+Cz with det L = F (witness-checked) and
    L(e) = F(e)^{1/n}·I ≻ 0.  `factors` block-composes per-factor
    representations under the common normalization; every factor must be
    positive at e.  Returns NOT_FOUND when a symmetric search fails."""
    if not isinstance(F, TernaryForm):
        F = TernaryForm(F)
    if e is None:
        e = F.e
    if e is None:
        raise PreconditionError("no direction given")
    e = tuple(Fraction(v) for v in e)
    fe = F.evaluate(e)
    if fe == 0:
        raise PreconditionError("form vanishes at the direction: F(e) = 0")
    if fe < 0:
        raise NotHyperbolic(f"form is negative at the direction: F(e) = {fe}")
    prime, U = normalize_direction(F, e)
    Uinv = _inv3(U)

    if factors:
        parts = [p if isinstance(p, TernaryForm) else TernaryForm(p) for p in factors]
        prod = parts[0]
        for p in parts[1:]:
            prod = prod * p
        if prod != F:
            raise ValueError("factors do not multiply to the form")
        reps = []
        scales = []
        for p in parts:
            pe = p.evaluate(e)
            if pe <= 0:
                raise NotHyperbolic(f"factor {p} is not positive at the direction")
            pprime = p.substitute(Uinv).scaled(Fraction(1) / pe)
            fp = dehomogenize(pprime.with_direction((0, 0, 1)))
            r = _rep_for(fp, kind, bound)
            if r is NOT_FOUND:
                return NOT_FOUND
            _enforce_degree_bound(r, fp)
            reps.append(r)
            scales.append((pe, r.n))
        rep = block_compose(reps)
    else:
        f = dehomogenize(prime)
        rep = _rep_for(f, kind, bound)
        if rep is NOT_FOUND:
            return NOT_FOUND
        _enforce_degree_bound(rep, f)
        scales = [(fe, rep.n)]

    _grid_verify(rep, prime)
    n = rep.n

    folded = [_fold_scale(base, size) for base, size in scales]
    if all(s is not None for s in folded):
        entry_scale = []
        for s, (_, size) in zip(folded, scales):
            entry_scale.extend([s] * size)
        scale = (Fraction(1), 1)
    else:
        if len(scales) > 1:
            raise ValueError(
                "cannot scale a factor pencil exactly: a factor value at e "
                "is not a perfect power"
            )
        entry_scale = [RadScalar.rational(1)] * n
        scale = (fe, n)

    M0 = [[RadScalar(rep.M[i][j].poly.coeff(0), rep.M[i][j].radicand) for j in range(n)] for i in range(n)]
    M1 = [[RadScalar(rep.M[i][j].poly.coeff(1), rep.M[i][j].radicand) for j in range(n)] for i in range(n)]

    def face(col):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                v = -U[1][col] * M0[i][j] - U[0][col] * M1[i][j]
                if i == j:
                    v = v + RadScalar.rational(U[2][col])
                row.append(entry_scale[i] * v)
            rows.append(tuple(row))
        return tuple(rows)

    A, B, C = face(0), face(1), face(2)
    pencil = Pencil(
        kind=kind, n=n, A=A, B=B, C=C, e=e, scale=scale, rep=rep, U=U, form=F,
        factors=tuple(parts) if factors else None,
    )
    # L(e) must be the scale times the identity, exactly
    Le = pencil.evaluate(e)
    for i in range(n):
        for j in range(n):
            want = entry_scale[i] if i == j else RadScalar.rational(0)
            if Le[i][j] != want:
                raise InternalCheckFailed("pencil is not scalar at the direction")
    return pencil
