"""Exact real-rootedness certificates via principal minors of the Hermite
matrix, and hyperbolicity certificates for ternary forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import CeilingExceeded, PreconditionError
from .exactalg import (
    BiPoly,
    FIELD_Q,
    PolyMatrix,
    UniPoly,
    find_negative_point,
    nonneg_on_R,
)
from .lalgebra import QuotientAlgebra

MINOR_CEILING = 12  # 2^12 - 1 = 4095 principal minors; beyond that we refuse


@dataclass(frozen=True)
class Certificate:
    """Outcome of a real-rootedness / hyperbolicity check.

    On success `minors` lists every principal minor (index subset, minor
    polynomial), each verified nonnegative on R.  On failure the witness
    triple pins down one violated minor and a rational point where it is
    negative, so the verdict can be re-checked by direct evaluation.
    """

    verdict: bool
    n: int
    minors: Tuple[Tuple[Tuple[int, ...], UniPoly], ...] = ()
    witness_indices: Optional[Tuple[int, ...]] = None
    witness_minor: Optional[UniPoly] = None
    witness_point: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None
    note: Optional[str] = None


def _require_rational_monic(f: BiPoly, what="input"):
    f.require_monic(what)
    if not f.is_rational():
        raise PreconditionError(f"{what} must have rational coefficients")
    return f.rational_part()


def hermite_matrix(f: BiPoly) -> PolyMatrix:
    """n x n symmetric matrix H with H[i][j] = p_{i+j}, the power sums of
    the t-roots of f (Newton's identities); Gram matrix of the trace form
    in the basis 1, t, ..., t^{n-1}."""
    f = _require_rational_monic(f)
    alg = QuotientAlgebra(f)
    n = alg.n
    ps = alg.power_sums(2 * n - 2) if n > 0 else []
    return PolyMatrix([[ps[i + j] for j in range(n)] for i in range(n)], FIELD_Q)


def certify_real_rooted(f: BiPoly, ceiling: int = MINOR_CEILING) -> Certificate:
    """Decide whether f(a, t) has only real t-roots for every real a.

    True iff all 2^n - 1 principal minors of the Hermite matrix are
    nonnegative on R.  Subsets are scanned smallest-first; the first
    violated minor yields a rational witness point.
    """
    f = _require_rational_monic(f)
    n = f.degree_t
    if n > ceiling:
        raise CeilingExceeded(
            f"minor count too large: degree {n} exceeds ceiling {ceiling}"
        )
    if n == 0:
        return Certificate(verdict=True, n=0)
    H = hermite_matrix(f)
    minors = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            m = H.submatrix(subset, subset).det()
            if nonneg_on_R(m):
                minors.append((subset, m))
                continue
            a = find_negative_point(m)
            assert a is not None
            val = m.evaluate(a)
            if hasattr(val, "re"):
                val = val.re
            return Certificate(
                verdict=False,
                n=n,
                witness_indices=subset,
                witness_minor=m,
                witness_point=a,
                witness_value=val,
            )
    return Certificate(verdict=True, n=n, minors=tuple(minors))


def certify_hyperbolic(form, e, ceiling: int = MINOR_CEILING) -> Certificate:
    """Certificate that the ternary form is hyperbolic with respect to the
    rational direction e AND positive there.

    Normalizes e to (0,0,1) with value 1, dehomogenizes at y = 1 and runs
    certify_real_rooted on the result; an extra sign gate rejects F(e) < 0.
    """
    from .hvpipeline import TernaryForm, dehomogenize, normalize_direction

    if not isinstance(form, TernaryForm):
        form = TernaryForm(form)
    fe = form.evaluate(e)
    if not getattr(fe, "im", 0) == 0:
        raise PreconditionError("direction value must be rational")
    fe = Fraction(fe.re) if hasattr(fe, "re") else Fraction(fe)
    if fe == 0:
        raise PreconditionError("form vanishes at the direction: F(e) = 0")
    normalized, _ = normalize_direction(form, e)
    f = dehomogenize(normalized)
    cert = certify_real_rooted(f, ceiling)
    if fe < 0:
        return Certificate(
            verdict=False,
            n=cert.n,
            minors=cert.minors,
            witness_indices=cert.witness_indices,
            witness_minor=cert.witness_minor,
            witness_point=cert.witness_point,
            witness_value=cert.witness_value,
            note=f"form is negative at the direction: F(e) = {fe}",
        )
    return cert
