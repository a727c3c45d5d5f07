"""Branch locus extraction: discriminants, ramification indices,
smoothness, conjugation closure."""

import pytest

import corpus as C
from specrep import analyze_curve, check_no_real_ramification
from specrep.errors import BranchPointNotRational, NotSmooth, NotSquarefree
from specrep.exactalg import FIELD_QI, UniPoly, gaussian_roots, parse_bipoly


def test_frozen_branch_data():
    for s, want in C.CURATED_BRANCH.items():
        cd = analyze_curve(parse_bipoly(s))
        got = [(str(b.a), str(b.t0), b.e) for b in cd.branch_points]
        assert got == want, s
        assert cd.smooth


def test_branch_points_conjugation_closed_and_sorted():
    for f in C.curated_curves():
        cd = analyze_curve(f)
        keys = [(b.a, b.t0, b.e) for b in cd.branch_points]
        for b in cd.branch_points:
            assert (b.a.conjugate(), b.t0.conjugate(), b.e) in keys
            assert b.m == b.e - 1 >= 1
            # branch points satisfy f = f_t = 0
            assert f.eval_point(b.a, b.t0).is_zero()
            assert f.partial_t().eval_point(b.a, b.t0).is_zero()
        assert keys == sorted(keys, key=lambda k: (k[0].re, k[0].im, k[1].re, k[1].im))


def test_tame_multiplicities_exhaust_discriminant():
    """Sum of (e-1) over the fiber equals the multiplicity of a in disc."""
    for f in C.curated_curves():
        cd = analyze_curve(f)
        if not cd.branch_points:
            continue
        mult = {}
        for root, m in gaussian_roots(cd.disc):
            mult[root] = m
        by_a = {}
        for b in cd.branch_points:
            by_a[b.a] = by_a.get(b.a, 0) + (b.e - 1)
        assert by_a == mult


def test_not_squarefree():
    with pytest.raises(NotSquarefree):
        analyze_curve(parse_bipoly("(t - x)*(t - x)"))
    with pytest.raises(NotSquarefree):
        analyze_curve(parse_bipoly("(t^2 - x^2 - 1)*(t^2 - x^2 - 1)"))


def test_not_smooth_on_crossing_components():
    # two lines through the origin meet affinely: a node
    with pytest.raises(NotSmooth):
        analyze_curve(parse_bipoly("(t - x)*(t + x)"))


def test_branch_point_not_rational():
    # branch point at the real cube root of 2
    with pytest.raises(BranchPointNotRational):
        analyze_curve(parse_bipoly("t^2 - x^3 + 2"))


def test_real_ramification_detected():
    cd = analyze_curve(parse_bipoly("t^2 - x"))
    assert cd.smooth
    assert [(str(b.a), str(b.t0)) for b in cd.branch_points] == [("0", "0")]
    assert not check_no_real_ramification(cd)


def test_no_real_ramification_on_certified():
    for f in C.curated_curves():
        assert check_no_real_ramification(analyze_curve(f))


def test_unramified_curve():
    # t^2 - 1: constant discriminant, no branch points
    cd = analyze_curve(parse_bipoly("t^2 - 1"))
    assert cd.branch_points == ()
    assert cd.smooth
