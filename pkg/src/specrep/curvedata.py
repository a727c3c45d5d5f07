"""Affine curve analysis for f(x,t) = 0: discriminant, branch points over
Q(i) with multiplicities, pointwise smoothness, and the no-real-ramification
check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import (
    BranchPointNotRational,
    NotSmooth,
    NotSquarefree,
    PreconditionError,
)
from .exactalg import (
    BiPoly,
    FIELD_QI,
    GaussRational,
    UniPoly,
    as_gauss,
    disc_t,
    format_scalar,
    gaussian_roots,
    poly_gcd,
    squarefree_part,
    sturm_count,
)


@dataclass(frozen=True)
class BranchPoint:
    """Point (a, t0) on the curve where the projection to the x-line
    ramifies: t0 is an e-fold t-root of f(a, .), e >= 2, m = e - 1."""

    a: GaussRational
    t0: GaussRational
    e: int
    m: int

    def __post_init__(self):
        assert self.e >= 2 and self.m == self.e - 1

    def conjugate(self) -> "BranchPoint":
        return BranchPoint(self.a.conjugate(), self.t0.conjugate(), self.e, self.m)

    def _sort_key(self):
        a, t0 = self.a, self.t0
        return (a.re, a.im, t0.re, t0.im)


@dataclass(frozen=True)
class CurveData:
    f: BiPoly
    disc: UniPoly
    branch_points: Tuple[BranchPoint, ...]
    smooth: bool


def analyze_curve(f: BiPoly) -> CurveData:
    """Discriminant, branch points, and smoothness of the affine curve.

    Every root of the discriminant must lie in Q(i), and above each the
    multiple t-roots must again be Q(i)-rational, accounting exactly for
    the root multiplicity of the discriminant (sum of e-1 per fiber);
    any shortfall raises BranchPointNotRational.  A point with both
    partials vanishing raises NotSmooth.
    """
    f.require_monic("curve polynomial")
    if not f.is_rational():
        raise PreconditionError("curve polynomial must have rational coefficients")
    f = f.rational_part()
    if f.degree_t < 1:
        raise PreconditionError("curve polynomial must have positive t-degree")
    ft = f.partial_t()
    disc = disc_t(f)
    if disc.is_zero():
        raise NotSquarefree("gcd(f, f_t) has positive t-degree")

    points = []
    if disc.degree > 0:
        x_roots = gaussian_roots(disc)
        if sum(v for _, v in x_roots) != disc.degree:
            raise BranchPointNotRational(
                "discriminant has a root outside Q(i)"
            )
        fx = f.partial_x()
        for a, v in x_roots:
            fa = f.eval_x(a).to_field(FIELD_QI)
            fta = ft.eval_x(a).to_field(FIELD_QI)
            g = poly_gcd(fa, fta)
            assert g.degree >= 1  # a is a root of the discriminant
            t_roots = gaussian_roots(g)
            if sum(m for _, m in t_roots) != g.degree:
                raise BranchPointNotRational(
                    f"multiple t-root outside Q(i) above x = {format_scalar(a)}"
                )
            local = []
            for t0, _ in t_roots:
                t0 = as_gauss(t0)
                lin = UniPoly((-t0, GaussRational(1)), FIELD_QI, "t")
                e, h = 0, fa
                while True:
                    q, r = h.divmod(lin)
                    if not r.is_zero():
                        break
                    e, h = e + 1, q
                assert e >= 2
                if fx.eval_point(a, t0) == 0:
                    raise NotSmooth(
                        f"singular point at ({format_scalar(a)}, {format_scalar(t0)})"
                    )
                local.append(BranchPoint(a, t0, e, e - 1))
            if sum(p.m for p in local) != v:
                raise BranchPointNotRational(
                    f"ramification shortfall above x = {format_scalar(a)}: "
                    f"sum of (e-1) is {sum(p.m for p in local)}, "
                    f"discriminant multiplicity is {v}"
                )
            points.extend(local)

    points.sort(key=BranchPoint._sort_key)
    # rational input: the branch list must be stable under conjugation
    assert {(p.a.conjugate(), p.t0.conjugate(), p.e) for p in points} == {
        (p.a, p.t0, p.e) for p in points
    }
    return CurveData(f=f, disc=disc, branch_points=tuple(points), smooth=True)


def check_no_real_ramification(cd: CurveData) -> bool:
    """True iff the discriminant has no real roots (Sturm count of its
    squarefree part is zero)."""
    if cd.disc.degree <= 0:
        return True
    return sturm_count(squarefree_part(cd.disc)) == 0
