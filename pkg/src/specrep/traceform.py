"""Scaled trace forms on ideal lattices: Gram matrices, unimodularity,
and constructive congruence-diagonalization to a constant diagonal."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import NonTermination
from .exactalg import (
    BiPoly,
    FIELD_QI,
    GaussRational,
    I as IMAG,
    PolyMatrix,
    RadScalar,
    RatFunc,
    UniPoly,
    as_gauss,
    positive_on_R,
    scalar_kernel,
)
from .ideallat import IdealLattice, _coerce_element
from .lalgebra import QuotientAlgebra


def trace_element(f: BiPoly, u) -> RatFunc:
    """Trace of the multiplication-by-u endomorphism of L."""
    alg = QuotientAlgebra(f.to_field(FIELD_QI))
    return _coerce_element(alg, u).trace()


@dataclass(frozen=True)
class GramForm:
    """G[k][l] = Tr(b_k^σ b_l c) over the HNF basis of the lattice, with
    σ = conjugation (hermitian) or identity (symmetric).  Entries are kept
    as rational functions; `integral` flags whether they all clear to F[x]."""

    lattice: IdealLattice
    scale: object  # LElement
    hermitian: bool
    entries: Tuple[Tuple[RatFunc, ...], ...]
    integral: bool

    @property
    def matrix(self) -> PolyMatrix:
        if not self.integral:
            raise ValueError("gram form has non-integral entries")
        return PolyMatrix(
            [[e.as_poly() for e in row] for row in self.entries], FIELD_QI
        )


def gram_matrix(I: IdealLattice, c=1, hermitian: bool = True) -> GramForm:
    c = _coerce_element(I.alg, c)
    if c.is_zero():
        raise ValueError("zero scaling element")
    cnum, cden = c.clear_denominator()
    dk = I.den.conj() if hermitian else I.den
    den = dk * I.den * cden
    rows = []
    for k in range(I.n):
        vk = [e.conj() for e in I.basis[k]] if hermitian else I.basis[k]
        row = []
        for l in range(I.n):
            prod = I.alg.mul_vectors(vk, I.basis[l])
            prod = I.alg.mul_vectors(prod, cnum)
            row.append(RatFunc(I.alg.trace_vector(prod), den))
        rows.append(tuple(row))
    integral = all(e.is_poly() for row in rows for e in row)
    return GramForm(
        lattice=I,
        scale=c,
        hermitian=hermitian,
        entries=tuple(rows),
        integral=integral,
    )


def is_unimodular(Gf: GramForm) -> bool:
    """det(G) a nonzero constant; non-integral entries mean the scaled
    lattice misses the codifferent, hence never unimodular."""
    if not Gf.integral:
        return False
    d = Gf.matrix.det()
    return (not d.is_zero()) and d.is_constant()


# -- congruence diagonalization ---------------------------------------------


def _sigma(p: UniPoly, herm: bool) -> UniPoly:
    return p.conj() if herm else p


def _congr(G0: PolyMatrix, T_cols, herm: bool) -> list:
    """G = T^σᵀ G0 T as lists of UniPoly, T given by columns."""
    n = G0.nrows
    G0T = [
        [
            sum((G0[i][k] * T_cols[j][k] for k in range(n)), UniPoly.zero(FIELD_QI))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return [
        [
            sum(
                (_sigma(T_cols[i][k], herm) * G0T[k][j] for k in range(n)),
                UniPoly.zero(FIELD_QI),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]


def _colop(T_cols, j, m, q):
    """v_j <- v_j - q v_m."""
    T_cols[j] = [T_cols[j][i] - q * T_cols[m][i] for i in range(len(T_cols))]


def _leading_form_exchange(G, T_cols, S, herm):
    """Replace one basis vector using a kernel vector of the leading
    coefficient form; only valid in the everywhere-PSD shape.  Returns True
    on success, False when the shape preconditions fail."""
    degs = {i: G[i][i].degree for i in S}
    for i in S:
        if degs[i] % 2 != 0:
            return False
        lc = as_gauss(G[i][i].lc())
        if not lc.is_rational() or lc.re <= 0:
            return False
    for i in S:
        for j in S:
            if G[i][j].degree > (degs[i] + degs[j]) // 2:
                return False
    idx = sorted(S)
    H = [
        [G[i][j].coeff((degs[i] + degs[j]) // 2) for j in idx]
        for i in idx
    ]
    kern = scalar_kernel(H, len(idx))
    if not kern:
        return False
    u = kern[0]
    supp = [k for k, v in enumerate(u) if v != 0]
    mk = max(supp, key=lambda k: (degs[idx[k]], idx[k]))
    m = idx[mk]
    x = UniPoly.x(FIELD_QI)
    new_col = None
    for k in supp:
        i = idx[k]
        shift = (degs[m] - degs[i]) // 2
        term = [
            UniPoly.monomial(u[k], shift, FIELD_QI) * T_cols[i][r]
            for r in range(len(T_cols))
        ]
        new_col = term if new_col is None else [
            new_col[r] + term[r] for r in range(len(T_cols))
        ]
    T_cols[m] = new_col
    return True


def _congruence_diagonalize(G0: PolyMatrix, herm: bool, allow_singular: bool = False):
    """(T, D) with T^σᵀ G0 T = diag(D), T unimodular over F[x].

    Constant pivots are split off exactly; positive-degree diagonals are
    attacked through the leading-form kernel (terminating whenever the form
    is PSD at every real point); a remainder-reduction fallback plus a round
    cap covers the rest, raising NonTermination on a stall."""
    n = G0.nrows
    T_cols = [
        [UniPoly.one(FIELD_QI) if i == j else UniPoly.zero(FIELD_QI) for i in range(n)]
        for j in range(n)
    ]
    S = set(range(n))
    total_deg = sum(max(e.degree, 0) for r in G0.rows for e in r)
    cap = 40 + 8 * total_deg
    rounds = 0
    while S:
        rounds += 1
        if rounds > cap:
            raise NonTermination("diagonalization stalled; degree not decreasing")
        G = _congr(G0, T_cols, herm)
        # 1) constant nonzero pivot: eliminate its row/column completely
        m = next(
            (k for k in sorted(S) if G[k][k].is_constant() and not G[k][k].is_zero()),
            None,
        )
        if m is not None:
            c = G[m][m].constant_value()
            inv = GaussRational(1) / (c if isinstance(c, GaussRational) else GaussRational(c))
            for j in sorted(S):
                if j != m and not G[m][j].is_zero():
                    _colop(T_cols, j, m, G[m][j] * inv)
            S.remove(m)
            continue
        # 2) zero diagonal
        m = next((k for k in sorted(S) if G[k][k].is_zero()), None)
        if m is not None:
            others = [j for j in sorted(S) if j != m and not G[m][j].is_zero()]
            if not others:
                if allow_singular:
                    S.remove(m)  # null vector: contributes a zero to D
                    continue
                raise NonTermination("degenerate block in unimodular input")
            j = min(others, key=lambda k: G[m][k].degree)
            u = G[m][j]
            lam = UniPoly.one(FIELD_QI)
            if herm and (u + u.conj()).is_zero():
                lam = UniPoly.const(IMAG, FIELD_QI)
            # v_m <- v_m + lam v_j  (colop subtracts, so negate)
            _colop(T_cols, m, j, -lam)
            continue
        # 3) positive-degree diagonals: leading-form exchange, else reduce
        if _leading_form_exchange(G, T_cols, S, herm):
            continue
        m = min(S, key=lambda k: (G[k][k].degree, k))
        progressed = False
        for j in sorted(S):
            if j == m:
                continue
            q, _ = G[m][j].divmod(G[m][m])
            if not q.is_zero():
                _colop(T_cols, j, m, q)
                progressed = True
        if not progressed:
            raise NonTermination("no applicable reduction step")
    G = _congr(G0, T_cols, herm)
    D = []
    for k in range(n):
        for l in range(n):
            if k != l and not G[k][l].is_zero():
                raise NonTermination("result not diagonal")
        if not G[k][k].is_constant():
            raise NonTermination("result not constant")
        v = as_gauss(G[k][k].constant_value())
        if not v.is_rational():
            raise NonTermination("non-real diagonal value")
        D.append(v.re)
    T = PolyMatrix([[T_cols[j][i] for j in range(n)] for i in range(n)], FIELD_QI)
    return T, tuple(D)


def diagonalize_unimodular(Gf):
    """(T, D): T^σᵀ G T = diag(D) with constant invertible congruence data.

    Accepts a GramForm or a plain PolyMatrix (conjugation inferred from
    whether the matrix is rational)."""
    if isinstance(Gf, GramForm):
        G = Gf.matrix
        herm = Gf.hermitian
    else:
        G = Gf
        herm = not G.is_rational()
    d = G.det()
    if d.is_zero() or not d.is_constant():
        raise ValueError("form is not unimodular")
    T, D = _congruence_diagonalize(G, herm)
    if any(v == 0 for v in D):
        raise NonTermination("unimodular form produced a zero diagonal entry")
    dt = T.det()
    if dt.is_zero() or not dt.is_constant():
        raise NonTermination("transition matrix is not unimodular")
    return T, D


def constant_signature(rows, hermitian: bool = False):
    """(n_plus, n_minus) of a constant symmetric/Hermitian matrix, by exact
    congruence diagonalization (zero eigenvalues allowed)."""
    n = len(rows)
    G = PolyMatrix(
        [[UniPoly.const(v, FIELD_QI) for v in row] for row in rows], FIELD_QI
    )
    _, D = _congruence_diagonalize(G, hermitian, allow_singular=True)
    pos = sum(1 for v in D if v > 0)
    neg = sum(1 for v in D if v < 0)
    return pos, neg


def is_positive_definite_on_R(G: PolyMatrix) -> bool:
    """Exact test that a symmetric/Hermitian polynomial matrix is positive
    definite at every real x: leading principal minors positive on R."""
    for k in range(1, G.nrows + 1):
        idx = tuple(range(k))
        mk = G.submatrix(idx, idx).det()
        if not mk.is_rational():
            return False
        if not positive_on_R(mk.rational_part()):
            return False
    return True


def constant_cholesky(D) -> list:
    """Square roots of a positive diagonal as canonical RadScalar values."""
    out = []
    for d in D:
        d = Fraction(d)
        if d <= 0:
            raise ValueError(f"nonpositive entry {d}")
        out.append(RadScalar.sqrt(d))
    return out
