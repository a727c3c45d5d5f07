"""Fractional ideals of B = F[x][t]/(f) as canonical HNF lattices over F[x]:
products, conjugation, inverses via trace duality, primes at curve points,
the conjugate half of the different, and bounded principality search."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .curvedata import CurveData, check_no_real_ramification
from .errors import InternalCheckFailed, PointNotOnCurve, PreconditionError
from .exactalg import (
    BiPoly,
    FIELD_QI,
    GaussRational,
    PolyMatrix,
    RatFunc,
    UniPoly,
    as_gauss,
    format_scalar,
    hnf_columns,
    poly_gcd,
    poly_lcm,
    scalar_kernel,
    solve_upper,
)
from .lalgebra import LElement, QuotientAlgebra


class NotFound:
    """Sentinel value for honest search failure (not an error)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotFound"

    def __bool__(self):
        return False


NOT_FOUND = NotFound()


def _content(polys):
    g = UniPoly.zero(FIELD_QI)
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_one():
            break
    return g


class IdealLattice:
    """Full-rank F[x]-lattice (1/den) * colspan(basis) inside L, closed under
    multiplication by t̄.

    basis: upper-triangular HNF with monic diagonal (column j = coordinates
    of the j-th basis element in the power basis 1, t̄, ..., t̄^{n-1});
    den: monic, coprime to the basis content.  Equal modules compare equal.
    """

    __slots__ = ("f", "alg", "n", "den", "basis")

    def __init__(self, f: BiPoly, columns, den: UniPoly, alg: Optional[QuotientAlgebra] = None):
        alg = alg if alg is not None else QuotientAlgebra(f.to_field(FIELD_QI))
        n = alg.n
        cols = [[c.to_field(FIELD_QI) for c in col] for col in columns]
        den = den.to_field(FIELD_QI)
        if den.is_zero():
            raise ValueError("zero denominator")
        basis = hnf_columns(cols, n)
        # canonical: monic den (constant rescaling never moves the HNF),
        # den coprime to the basis content
        den = den.monic()
        if den.degree > 0:
            g = poly_gcd(_content([e for col in basis for e in col]), den)
            if g.degree > 0:
                den = den.exact_div(g)
                basis = [[e.exact_div(g) for e in col] for col in basis]
        object.__setattr__(self, "f", alg.f)
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "basis", basis)
        self._check_tbar_closed()

    def __setattr__(self, name, value):
        raise AttributeError("IdealLattice is immutable")

    def _check_tbar_closed(self):
        for col in self.basis:
            if solve_upper(self.basis, self.alg.shift_vector(col)) is None:
                raise InternalCheckFailed("lattice is not closed under t̄")

    # -- views -------------------------------------------------------------

    @property
    def matrix(self) -> PolyMatrix:
        return PolyMatrix(
            [[self.basis[j][i] for j in range(self.n)] for i in range(self.n)],
            FIELD_QI,
        )

    def basis_element(self, j) -> LElement:
        return self.alg.element(self.basis[j], self.den)

    def basis_elements(self):
        return [self.basis_element(j) for j in range(self.n)]

    def is_rational(self) -> bool:
        return self.den.is_rational() and all(
            e.is_rational() for col in self.basis for e in col
        )

    def contains(self, elem: LElement) -> bool:
        """Membership test: elem in (1/den) colspan."""
        coords, d = elem.clear_denominator()
        # need den * elem integral after scaling: elem = v/d; den*elem = den*v/d
        scaled = []
        for c in coords:
            num = c * self.den
            q, r = num.divmod(d)
            if not r.is_zero():
                return False
            scaled.append(q)
        return solve_upper(self.basis, scaled) is not None

    def __eq__(self, other):
        if not isinstance(other, IdealLattice):
            return NotImplemented
        return (
            self.f == other.f
            and self.den == other.den
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash(
            (self.f, self.den, tuple(tuple(col) for col in self.basis))
        )

    def __repr__(self):
        from .exactalg import format_unipoly

        cols = "; ".join(
            ",".join(format_unipoly(e) for e in col) for col in self.basis
        )
        return f"IdealLattice(den={self.den!r}, cols=[{cols}])"


def _coerce_element(alg: QuotientAlgebra, gen) -> LElement:
    if isinstance(gen, LElement):
        return gen
    if isinstance(gen, BiPoly):
        g = gen.to_field(FIELD_QI)
        if g.degree_t >= alg.n:
            # reduce with the power table
            coords = [UniPoly.zero(FIELD_QI) for _ in range(alg.n)]
            for k in range(g.degree_t + 1):
                c = g.coeff(k)
                if c.is_zero():
                    continue
                pw = alg.power_vector(k)
                coords = [coords[i] + c * pw[i] for i in range(alg.n)]
            return alg.element(coords)
        coords = [g.coeff(k) for k in range(alg.n)]
        return alg.element(coords)
    if isinstance(gen, (int, Fraction, GaussRational, UniPoly, RatFunc)):
        coords = [gen] + [0] * (alg.n - 1)
        return alg.element(coords)
    coords = list(gen)
    if len(coords) > alg.n:
        raise ValueError("generator has too many coordinates")
    coords = coords + [0] * (alg.n - len(coords))
    return alg.element(coords)


def ideal_from_generators(f: BiPoly, gens: Sequence, alg: Optional[QuotientAlgebra] = None) -> IdealLattice:
    """B-module generated by the given elements of L: closure under t̄,
    common denominator cleared, canonical HNF."""
    alg = alg if alg is not None else QuotientAlgebra(f.to_field(FIELD_QI))
    elems = [_coerce_element(alg, g) for g in gens]
    elems = [e for e in elems if not e.is_zero()]
    if not elems:
        raise ValueError("zero module")
    cleared = [e.clear_denominator() for e in elems]
    den = UniPoly.one(FIELD_QI)
    for _, d in cleared:
        den = poly_lcm(den, d)
    cols = []
    for v, d in cleared:
        scale = den.exact_div(d)
        w = [c * scale for c in v]
        for _ in range(alg.n):
            cols.append(w)
            w = alg.shift_vector(w)
    return IdealLattice(alg.f, cols, den, alg)


def unit_ideal(f: BiPoly, alg: Optional[QuotientAlgebra] = None) -> IdealLattice:
    return ideal_from_generators(f, [1], alg)


def ideal_mul(I: IdealLattice, J: IdealLattice) -> IdealLattice:
    """Product module (span of pairwise basis products)."""
    if I.f != J.f:
        raise ValueError("ambient mismatch")
    cols = []
    for a in I.basis:
        for b in J.basis:
            cols.append(I.alg.mul_vectors(a, b))
    return IdealLattice(I.f, cols, I.den * J.den, I.alg)


def ideal_conjugate(I: IdealLattice) -> IdealLattice:
    """Coefficient-wise complex conjugation (t̄ is fixed).  The conjugate of
    a canonical HNF lattice is already canonical."""
    cols = [[e.conj() for e in col] for col in I.basis]
    return IdealLattice(I.f, cols, I.den.conj(), I.alg)


def ideal_pow(I: IdealLattice, k: int) -> IdealLattice:
    if k < 0:
        return ideal_pow(ideal_inverse(I), -k)
    out = unit_ideal(I.f, I.alg)
    for _ in range(k):
        out = ideal_mul(out, I)
    return out


def prime_at_point(f: BiPoly, a, t0, alg: Optional[QuotientAlgebra] = None) -> IdealLattice:
    """Maximal ideal (x - a, t̄ - t0) at a smooth point of the curve."""
    a = as_gauss(a)
    t0 = as_gauss(t0)
    fQ = f.to_field(FIELD_QI)
    if fQ.eval_point(a, t0) != 0:
        raise PointNotOnCurve(
            f"({format_scalar(a)}, {format_scalar(t0)}) is not on the curve"
        )
    from .errors import NotSmooth

    if fQ.partial_t().eval_point(a, t0) == 0 and fQ.partial_x().eval_point(a, t0) == 0:
        raise NotSmooth(
            f"curve is singular at ({format_scalar(a)}, {format_scalar(t0)})"
        )
    alg = alg if alg is not None else QuotientAlgebra(fQ)
    xa = UniPoly((-a, GaussRational(1)), FIELD_QI)
    gen_x = [xa] + [UniPoly.zero(FIELD_QI)] * (alg.n - 1)
    tbar = alg.power_vector(1)  # works for n = 1 too, where t̄ is scalar
    gen_t = [tbar[0] - t0] + list(tbar[1:])
    q = ideal_from_generators(alg.f, [gen_x, gen_t], alg)
    det = q.matrix.det()
    if det.degree != 1:
        raise InternalCheckFailed(
            f"residue dimension of the point ideal is {det.degree}, expected 1"
        )
    return q


def half_different(cd: CurveData, alg: Optional[QuotientAlgebra] = None) -> IdealLattice:
    """J = prod over one branch point of each conjugate pair (Im a > 0) of
    q_P^(e_P - 1); satisfies conj(J)·J = (f_t), checked internally."""
    if not check_no_real_ramification(cd):
        raise PreconditionError("real ramification present")
    f = cd.f.to_field(FIELD_QI)
    alg = alg if alg is not None else QuotientAlgebra(f)
    J = unit_ideal(f, alg)
    for p in cd.branch_points:
        if p.a.im <= 0:
            continue
        q = prime_at_point(f, p.a, p.t0, alg)
        for _ in range(p.m):
            J = ideal_mul(J, q)
    ft = ideal_from_generators(f, [cd.f.partial_t()], alg)
    if ideal_mul(ideal_conjugate(J), J) != ft:
        raise InternalCheckFailed("half-different identity conj(J)·J = (f_t) failed")
    return J


def _trace_gram(I: IdealLattice) -> PolyMatrix:
    """P[k][l] = Tr((den b_k)(den b_l)) — plain trace, no conjugation."""
    n = I.n
    rows = []
    for k in range(n):
        row = []
        for l in range(n):
            prod = I.alg.mul_vectors(I.basis[k], I.basis[l])
            row.append(I.alg.trace_vector(prod))
        rows.append(row)
    return PolyMatrix(rows, FIELD_QI)


def ideal_inverse(I: IdealLattice) -> IdealLattice:
    """I^{-1} via trace duality: the dual lattice I^v = {u : Tr(u I) ⊆ F[x]}
    equals (1/f_t(t̄))·I^{-1}, so I^{-1} = I^v · (f_t(t̄))."""
    P = _trace_gram(I)
    detP = P.det()
    if detP.is_zero():
        raise InternalCheckFailed("degenerate trace form; input not invertible")
    adjP = P.adjugate()
    n = I.n
    # dual basis columns: den * (basis @ adjP), denominator det(P)
    cols = []
    for j in range(n):
        col = [UniPoly.zero(FIELD_QI) for _ in range(n)]
        for k in range(n):
            ckj = adjP[k][j]
            if ckj.is_zero():
                continue
            bk = I.basis[k]
            col = [col[i] + ckj * bk[i] for i in range(n)]
        cols.append([e * I.den for e in col])
    dual = IdealLattice(I.f, cols, detP, I.alg)
    ft_ideal = ideal_from_generators(I.f, [I.f.partial_t()], I.alg)
    inv = ideal_mul(dual, ft_ideal)
    if ideal_mul(I, inv) != unit_ideal(I.f, I.alg):
        raise InternalCheckFailed("ideal inverse failed the product identity")
    return inv


def _membership_space(I: IdealLattice, bound: int):
    """Basis of {g in I with polynomial coordinates, deg g_i <= bound} as
    coordinate vectors (tuples of UniPoly).

    Linear system: den*g = basis @ lam for polynomial lam; unknowns are the
    coefficients of g (n*(bound+1)) and of lam (n*(dlam+1)).
    """
    n = I.n
    den = I.den
    dden = den.degree
    dg = bound + dden  # degree of den*g coordinates
    dcol = max(e.degree for col in I.basis for e in col if not e.is_zero())
    dlam = dg  # safe: triangular basis with monic diagonal keeps deg lam <= deg rhs
    ng = n * (bound + 1)
    nl = n * (dlam + 1)
    ncols = ng + nl
    field_rational = I.is_rational()

    def gvar(i, k):
        return i * (bound + 1) + k

    def lvar(j, k):
        return ng + j * (dlam + 1) + k

    rows = []
    nrows_deg = max(dg, dcol + dlam) + 1
    zero = GaussRational(0)
    for i in range(n):
        for d in range(nrows_deg):
            row = [zero] * ncols
            any_nonzero = False
            # den*g coordinate i, degree-d coefficient
            for k in range(bound + 1):
                c = den.coeff(d - k)
                if d - k >= 0 and c != 0:
                    row[gvar(i, k)] = as_gauss(c)
                    any_nonzero = True
            # minus (basis @ lam) coordinate i
            for j in range(n):
                bij = I.basis[j][i]
                if bij.is_zero():
                    continue
                for k in range(dlam + 1):
                    c = bij.coeff(d - k)
                    if d - k >= 0 and c != 0:
                        row[lvar(j, k)] = row[lvar(j, k)] - as_gauss(c)
                        any_nonzero = True
            if any_nonzero:
                rows.append(row)
    kern = scalar_kernel(rows, ncols)
    out = []
    seen = set()
    for v in kern:
        coords = []
        for i in range(n):
            cs = [v[gvar(i, k)] for k in range(bound + 1)]
            coords.append(UniPoly(cs, FIELD_QI))
        if all(c.is_zero() for c in coords):
            continue  # pure-lambda kernel direction
        key = tuple(coords)
        if key in seen:
            continue
        seen.add(key)
        if field_rational and not all(c.is_rational() for c in coords):
            continue
        out.append(coords)
    return out


def generator_candidates(I: IdealLattice, degree_bound: int):
    """Yield every g with (g) = I found by the graded sweep, lowest degree
    first.  Per degree: membership-space kernel basis singles, then pairwise
    ±1 combinations.  Distinct unit multiples of one generator all come out,
    which downstream sign searches rely on."""
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")
    n = I.n
    tried = set()
    for d in range(degree_bound + 1):
        space = _membership_space(I, d)
        candidates = list(space)
        for i in range(len(space)):
            for j in range(i + 1, len(space)):
                candidates.append(
                    [space[i][k] + space[j][k] for k in range(n)]
                )
                candidates.append(
                    [space[i][k] - space[j][k] for k in range(n)]
                )
        for coords in candidates:
            key = tuple(coords)
            if key in tried:
                continue
            tried.add(key)
            g = I.alg.element(coords)
            if g.is_zero():
                continue
            if ideal_from_generators(I.f, [g], I.alg) == I:
                yield g


def principal_generator_search(I: IdealLattice, degree_bound: int):
    """First generator from the graded sweep, or NOT_FOUND."""
    for g in generator_candidates(I, degree_bound):
        return g
    return NOT_FOUND


def default_search_bound(f: BiPoly) -> int:
    from .exactalg import disc_t

    return 2 * f.degree_t + max(disc_t(f.rational_part()).degree, 0)
