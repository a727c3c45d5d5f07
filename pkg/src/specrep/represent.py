"""Spectral representations: M(x) Hermitian / real symmetric with
det(tI - M) = f.  The Hermitian construction runs unconditionally on smooth
real-rooted instances with Gaussian-rational branch points; the symmetric one
is a bounded search over candidate ideal classes and scalings.

All correctness checks are radical-free polynomial identities on the witness
(M_I, T, D, N); M itself is materialized with single-radical entries
n_kl * sqrt(d_k d_l) / d_l.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .certify import certify_real_rooted
from .curvedata import analyze_curve
from .errors import InternalCheckFailed, NotHyperbolic
from .exactalg import (
    BiPoly,
    FIELD_QI,
    GaussRational,
    PolyMatrix,
    RadPoly,
    RadScalar,
    UniPoly,
    format_unipoly,
    solve_upper,
)
from .ideallat import (
    IdealLattice,
    NOT_FOUND,
    default_search_bound,
    generator_candidates,
    half_different,
    ideal_conjugate,
    ideal_from_generators,
    ideal_mul,
    ideal_pow,
    prime_at_point,
    unit_ideal,
)
from .lalgebra import QuotientAlgebra
from .traceform import (
    diagonalize_unimodular,
    gram_matrix,
    is_positive_definite_on_R,
    is_unimodular,
)


@dataclass(frozen=True)
class SpectralRep:
    """M plus the radical-free witness of its construction."""

    kind: str  # "hermitian" | "symmetric"
    f: BiPoly
    M: Tuple[Tuple[RadPoly, ...], ...]
    M_I: PolyMatrix
    T: PolyMatrix
    D: Tuple[Fraction, ...]
    N: PolyMatrix

    @property
    def n(self) -> int:
        return len(self.D)

    def as_json(self):
        from .exactalg import format_bipoly

        return {
            "kind": self.kind,
            "n": self.n,
            "f": format_bipoly(self.f),
            "M": [[e.as_json() for e in row] for row in self.M],
            "witness": {
                "M_I": _matrix_json(self.M_I),
                "T": _matrix_json(self.T),
                "D": [str(d) for d in self.D],
                "N": _matrix_json(self.N),
            },
        }


def _matrix_json(A: PolyMatrix):
    return [[format_unipoly(e) for e in row] for row in A.rows]


def mult_matrix(I: IdealLattice) -> PolyMatrix:
    """Matrix of multiplication by t̄ in the HNF basis of I; column j holds
    the coordinates of t̄·b_j.  Denominators cancel, entries land in F[x]."""
    n = I.n
    cols = []
    for j in range(n):
        y = solve_upper(I.basis, I.alg.shift_vector(I.basis[j]))
        if y is None:
            raise InternalCheckFailed("lattice is not closed under multiplication by t")
        cols.append(y)
    M = PolyMatrix([[cols[j][i] for j in range(n)] for i in range(n)], FIELD_QI)
    if M.charpoly_t() != I.alg.f:
        raise InternalCheckFailed("multiplication matrix has wrong characteristic polynomial")
    return M


def _diag_matrix(D, field=FIELD_QI) -> PolyMatrix:
    n = len(D)
    return PolyMatrix(
        [
            [UniPoly.const(D[i], field) if i == j else UniPoly.zero(field) for j in range(n)]
            for i in range(n)
        ],
        field,
    )


def _sigma_transpose(A: PolyMatrix, hermitian: bool) -> PolyMatrix:
    return A.conj_transpose() if hermitian else A.transpose()


def _scaled_entries(N: PolyMatrix, D) -> Tuple[Tuple[RadPoly, ...], ...]:
    """M = D^{1/2} N D^{-1/2}: entry (k,l) is sqrt(d_k d_l)/d_l times n_kl."""
    n = N.nrows
    rows = []
    for k in range(n):
        row = []
        for l in range(n):
            s = RadScalar.sqrt(D[k] * D[l]) / D[l]
            row.append(RadPoly.from_scaled(s, N[k][l]))
        rows.append(tuple(row))
    return tuple(rows)


def _finish(f: BiPoly, I: IdealLattice, G, kind: str) -> SpectralRep:
    herm = kind == "hermitian"
    T, D = diagonalize_unimodular(G)
    if any(d <= 0 for d in D):
        raise InternalCheckFailed("diagonalized trace form is not positive")
    M_I = mult_matrix(I)
    det = T.det().constant_value()
    inv_det = GaussRational(1) / (det if isinstance(det, GaussRational) else GaussRational(det))
    N = (T.adjugate() @ M_I @ T) * inv_det
    Dm = _diag_matrix(D)
    if _sigma_transpose(N, herm) @ Dm != Dm @ N:
        raise InternalCheckFailed("multiplication operator is not self-adjoint for the trace form")
    M = _scaled_entries(N, D)
    for k in range(len(D)):
        for l in range(len(D)):
            want = M[l][k].conj() if herm else M[l][k]
            if M[k][l] != want:
                raise InternalCheckFailed("representing matrix lost its symmetry")
    return SpectralRep(kind=kind, f=f, M=M, M_I=M_I, T=T, D=tuple(D), N=N)


def _prepare(f: BiPoly):
    """Shared preconditions: rational monic real-rooted f, analyzable curve.
    Returns (f over Q(i), curve data, J, algebra, codifferent ideal)."""
    if not f.is_rational():
        raise ValueError("coefficients must be rational")
    cert = certify_real_rooted(f)
    if not cert.verdict:
        raise NotHyperbolic(
            f"not real-rooted: principal minor {list(cert.witness_indices)} is negative at x = {cert.witness_point}"
        )
    cd = analyze_curve(f)
    J = half_different(cd)
    alg = J.alg
    ft_inv = alg.element_from_tpoly(f.partial_t()).inverse()
    codif = ideal_from_generators(f, [ft_inv], alg)
    return cd, J, alg, codif


def hermitian_representation(f: BiPoly) -> SpectralRep:
    """I = (1/f_t)·conj(J) makes the plain-trace Gram matrix unimodular with
    scale 1; diagonalize and conjugate the multiplication matrix."""
    cd, J, alg, codif = _prepare(f)
    I = ideal_mul(codif, ideal_conjugate(J))
    G = gram_matrix(I, 1, hermitian=True)
    if not is_unimodular(G):
        raise InternalCheckFailed("trace form on the scaled conjugate ideal is not unimodular")
    return _finish(alg.f, I, G, "hermitian")


def symmetric_representation_search(f: BiPoly, bound: int = None):
    """Search conjugation-stable ideals I₀ = ∏(q_P q_P̄)^ε, |ε| ≤ m_P, for one
    whose scaling ideal C = Δ·I₀⁻² has a real generator c making the symmetric
    trace form positive definite.  Exponent vectors go in lexicographic order
    and generators come lowest-degree-first, so the first accept is
    deterministic.  NotFound is a legitimate outcome, not a disproof."""
    cd, J, alg, codif = _prepare(f)
    if bound is None:
        bound = default_search_bound(f)
    uppers = [P for P in cd.branch_points if P.a.im > 0]
    qpairs = []
    for P in uppers:
        q = prime_at_point(alg.f, P.a, P.t0, alg)
        qpairs.append(ideal_mul(q, ideal_conjugate(q)))
    ranges = [range(-P.m, P.m + 1) for P in uppers]
    for eps in itertools.product(*ranges):
        I0 = unit_ideal(alg.f, alg)
        for qq, e in zip(qpairs, eps):
            if e:
                I0 = ideal_mul(I0, ideal_pow(qq, e))
        if not I0.is_rational():
            raise InternalCheckFailed("conjugation-stable ideal has an irrational basis")
        C = ideal_mul(codif, ideal_pow(I0, -2))
        # search on the integral rescale den·C, then divide the generator back
        Cint = IdealLattice(alg.f, C.basis, UniPoly.one(FIELD_QI), alg)
        for gp in generator_candidates(Cint, bound):
            if not gp.is_conj_fixed():
                continue
            nums, gden = gp.clear_denominator()
            c = alg.element(nums, C.den * gden)
            G = gram_matrix(I0, c, hermitian=False)
            if not G.integral or not is_unimodular(G):
                continue
            Gm = G.matrix
            if is_positive_definite_on_R(Gm):
                pass
            elif is_positive_definite_on_R(-Gm):
                c = -c
                G = gram_matrix(I0, c, hermitian=False)
            else:
                continue
            return _finish(alg.f, I0, G, "symmetric")
    return NOT_FOUND


def verify_representation(f: BiPoly, rep: SpectralRep) -> bool:
    """Exact, radical-free recheck of every invariant of a SpectralRep."""
    herm = rep.kind == "hermitian"
    fqi = f.to_field(FIELD_QI)
    if rep.M_I.charpoly_t() != fqi:
        return False
    det = rep.T.det()
    if det.is_zero() or not det.is_constant():
        return False
    if any(d <= 0 for d in rep.D):
        return False
    # N = T⁻¹ M_I T without forming the inverse
    if rep.T @ rep.N != rep.M_I @ rep.T:
        return False
    Dm = _diag_matrix(rep.D)
    if _sigma_transpose(rep.N, herm) @ Dm != Dm @ rep.N:
        return False
    if rep.M != _scaled_entries(rep.N, rep.D):
        return False
    for k in range(rep.n):
        for l in range(rep.n):
            want = rep.M[l][k].conj() if herm else rep.M[l][k]
            if rep.M[k][l] != want:
                return False
    return True


def block_compose(reps) -> SpectralRep:
    """Block-diagonal composition; charpoly multiplies."""
    reps = list(reps)
    if not reps:
        raise ValueError("need at least one representation")
    kinds = {r.kind for r in reps}
    if len(kinds) != 1:
        raise ValueError(f"kind mismatch: {sorted(kinds)}")
    if len(reps) == 1:
        return reps[0]
    f = reps[0].f
    for r in reps[1:]:
        f = f * r.f
    sizes = [r.n for r in reps]
    total = sum(sizes)

    def block(pick):
        rows = [[UniPoly.zero(FIELD_QI) for _ in range(total)] for _ in range(total)]
        off = 0
        for r, s in zip(reps, sizes):
            src = pick(r)
            for i in range(s):
                for j in range(s):
                    rows[off + i][off + j] = src[i][j]
            off += s
        return PolyMatrix(rows, FIELD_QI)

    zero_rp = RadPoly(1, UniPoly.zero(FIELD_QI))
    Mrows = [[zero_rp for _ in range(total)] for _ in range(total)]
    off = 0
    for r, s in zip(reps, sizes):
        for i in range(s):
            for j in range(s):
                Mrows[off + i][off + j] = r.M[i][j]
        off += s
    M_I = block(lambda r: r.M_I)
    if M_I.charpoly_t() != f:
        raise InternalCheckFailed("block charpoly does not multiply")
    D = tuple(d for r in reps for d in r.D)
    return SpectralRep(
        kind=reps[0].kind,
        f=f,
        M=tuple(tuple(row) for row in Mrows),
        M_I=M_I,
        T=block(lambda r: r.T),
        D=D,
        N=block(lambda r: r.N),
    )
