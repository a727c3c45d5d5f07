"""Foundation layer: Gaussian rationals, polynomials, matrices, root
counting, factorization, radicals, parsing."""

import random
from fractions import Fraction

import pytest

import oracles as O
from specrep.errors import ParseError
from specrep.exactalg import (
    FIELD_Q,
    FIELD_QI,
    BiPoly,
    GaussRational,
    PolyMatrix,
    RadPoly,
    RadScalar,
    UniPoly,
    as_fraction,
    as_gauss,
    conj,
    disc_t,
    factor_over_Q,
    find_negative_point,
    format_bipoly,
    format_unipoly,
    gaussian_roots,
    hnf_reduce,
    is_rational_square,
    is_squarefree,
    isolate_real_roots,
    nonneg_on_R,
    parse_bipoly,
    parse_ternary_monomials,
    parse_unipoly,
    poly_gcd,
    poly_xgcd,
    positive_on_R,
    rational_roots,
    resultant_t,
    solve_upper,
    squarefree_part,
    sturm_count,
)


def F(a, b=1):
    return Fraction(a, b)


# ------------------------------------------------------------------- gauss


def test_gauss_ring_laws():
    rng = random.Random(11)
    for _ in range(50):
        a = GaussRational(F(rng.randint(-9, 9), rng.randint(1, 5)), F(rng.randint(-9, 9)))
        b = GaussRational(F(rng.randint(-9, 9)), F(rng.randint(-9, 9), rng.randint(1, 5)))
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a
        n = a * a.conjugate()
        assert n.im == 0 and n.re >= 0
        if not b.is_zero():
            assert (a / b) * b == a


def test_as_fraction_rejects_complex():
    assert as_fraction(GaussRational(F(3), F(0))) == F(3)
    with pytest.raises(ValueError):
        as_fraction(GaussRational(F(0), F(1)))


def test_is_rational_square():
    assert is_rational_square(F(49, 4)) == F(7, 2)
    assert is_rational_square(F(2)) is None
    assert is_rational_square(F(-4)) is None
    assert is_rational_square(F(0)) == 0


# -------------------------------------------------------------------- poly


def test_unipoly_divmod_and_gcd():
    rng = random.Random(5)
    for _ in range(30):
        a = UniPoly([F(rng.randint(-6, 6)) for _ in range(rng.randint(1, 6))])
        b = UniPoly([F(rng.randint(-6, 6)) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree
        g = poly_gcd(a, b)
        if not g.is_zero():
            assert a.divmod(g)[1].is_zero() and b.divmod(g)[1].is_zero()
            assert g.lc() == 1
        gg, s, t = poly_xgcd(a, b)
        assert s * a + t * b == gg


def test_unipoly_compose_evaluate():
    p = parse_unipoly("x^2 + 3x + 1")
    inner = parse_unipoly("2x - 1")
    q = p.compose(inner)
    for a in (F(0), F(1), F(-2), F(1, 3)):
        assert q.evaluate(a) == p.evaluate(inner.evaluate(a))


def test_bipoly_arithmetic():
    f = parse_bipoly("t^2 - x^2 - 1")
    g = parse_bipoly("t - x")
    h = f * g
    assert h.degree_t == 3
    assert h.eval_point(F(2), F(3)) == f.eval_point(F(2), F(3)) * g.eval_point(F(2), F(3))
    assert f.partial_t() == parse_bipoly("2t")
    assert f.partial_x() == parse_bipoly("-2x")
    assert f.conj() == f
    assert f.total_degree() == 2


def test_bipoly_monic_guard():
    f = parse_bipoly("xt^2 + 1")
    with pytest.raises(Exception):
        f.require_monic()


# ----------------------------------------------------------------- grammar


def test_parse_format_round_trip():
    rng = random.Random(3)
    for _ in range(25):
        cs = [F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(rng.randint(1, 7))]
        p = UniPoly(cs)
        assert parse_unipoly(format_unipoly(p)) == p
    for s in ("t^2 - x^2 - 1", "t^3 + (1/2)x t - 7", "(t - x)*(t + x)"):
        f = parse_bipoly(s)
        assert parse_bipoly(format_bipoly(f)) == f


def test_parse_gaussian_coefficients():
    f = parse_bipoly("t^2 + i*t - 1")
    assert not f.is_rational()
    assert f.conj() == parse_bipoly("t^2 - i*t - 1")


def test_parse_errors():
    for bad in ("t^^2", "x +* 1", "(x + 1", "2 ** x", ""):
        with pytest.raises(ParseError):
            parse_bipoly(bad)


def test_parse_ternary():
    mono = parse_ternary_monomials("x^2 + 2*y*z - z^2")
    assert mono[(2, 0, 0)] == as_gauss(1)
    assert mono[(0, 1, 1)] == as_gauss(2)
    assert mono[(0, 0, 2)] == as_gauss(-1)


# ----------------------------------------------------------------- pmatrix


def test_det_against_cofactor_oracle():
    rng = random.Random(17)
    for n in (2, 3, 4):
        for _ in range(8):
            rows = [
                [UniPoly([F(rng.randint(-3, 3)) for _ in range(2)]) for _ in range(n)]
                for _ in range(n)
            ]
            M = PolyMatrix(rows, FIELD_Q)
            assert M.det() == O.naive_det(rows)


def test_adjugate_identity():
    rng = random.Random(23)
    for _ in range(6):
        rows = [
            [UniPoly([F(rng.randint(-2, 2)), F(rng.randint(-2, 2))]) for _ in range(3)]
            for _ in range(3)
        ]
        M = PolyMatrix(rows, FIELD_Q)
        d = M.det()
        prod = M @ M.adjugate()
        for i in range(3):
            for j in range(3):
                assert prod[i][j] == (d if i == j else UniPoly.zero())


def test_charpoly_against_cofactor():
    """det(tI - M) via Faddeev-LeVerrier must match plain cofactor expansion."""
    rng = random.Random(29)
    one = UniPoly.one(FIELD_Q)
    for n in (2, 3):
        for _ in range(6):
            rows = [
                [UniPoly([F(rng.randint(-3, 3)), F(rng.randint(-2, 2))]) for _ in range(n)]
                for _ in range(n)
            ]
            M = PolyMatrix(rows, FIELD_Q)
            tIM = [
                [BiPoly([-rows[i][j], one]) if i == j else BiPoly([-rows[i][j]]) for j in range(n)]
                for i in range(n)
            ]
            assert M.charpoly_t() == O.naive_det(tIM)


def test_hnf_canonical_under_column_ops():
    # scrambling columns by unimodular operations must not change the HNF
    rng = random.Random(31)
    x = UniPoly.x()
    cols = [[x * x + 1, UniPoly.zero()], [x, UniPoly.one()]]
    base = hnf_reduce(cols, 2)
    for _ in range(10):
        c = [list(col) for col in cols]
        for _ in range(4):
            i, j = rng.sample(range(len(c)), 2)
            q = UniPoly([F(rng.randint(-2, 2)), F(rng.randint(-2, 2))])
            c[i] = [a + q * b for a, b in zip(c[i], c[j])]
        assert hnf_reduce(c, 2) == base


def test_solve_upper():
    x = UniPoly.x()
    # column j is supported on rows 0..j
    basis = [[x * x + 1, UniPoly.zero()], [x, UniPoly.one()]]
    v = [(x * x + 1) * 3 + x * 5, UniPoly.const(5)]
    sol = solve_upper(basis, v)
    assert sol == [UniPoly.const(3), UniPoly.const(5)]
    assert solve_upper(basis, [UniPoly.one(), UniPoly.zero()]) is None


def test_resultant_and_disc_convention():
    f = parse_bipoly("t^2 - x^2 - 1")
    assert disc_t(f) == parse_unipoly("-4x^2 - 4")
    g = parse_bipoly("t - x")
    # res(f, g*h) = res(f,g) * res(f,h)
    h = parse_bipoly("t + 1")
    assert resultant_t(f, g * h) == resultant_t(f, g) * resultant_t(f, h)


# ------------------------------------------------------------------- roots


def test_sturm_count_matches_oracle():
    rng = random.Random(41)
    for _ in range(40):
        cs = [F(rng.randint(-7, 7)) for _ in range(rng.randint(2, 7))]
        p = UniPoly(cs)
        if p.is_zero() or p.degree < 1:
            continue
        assert sturm_count(p) == O.count_real_roots(cs)


def test_nonneg_and_witness():
    rng = random.Random(43)
    for _ in range(40):
        p = UniPoly([F(rng.randint(-6, 6)) for _ in range(rng.randint(1, 6))])
        if p.is_zero():
            continue
        a = find_negative_point(p)
        if nonneg_on_R(p):
            assert a is None
        else:
            assert as_fraction(p.evaluate(a)) < 0


def test_positive_on_R():
    assert positive_on_R(parse_unipoly("x^2 + 1"))
    assert not positive_on_R(parse_unipoly("x^2"))  # zero at 0
    assert not positive_on_R(parse_unipoly("x^2 - 1"))


def test_isolate_real_roots():
    p = parse_unipoly("x^3 - x")  # roots -1, 0, 1
    ivs = isolate_real_roots(p)
    assert len(ivs) == 3
    for (lo, hi), root in zip(ivs, (F(-1), F(0), F(1))):
        assert lo < root < hi
    assert isolate_real_roots(parse_unipoly("x^2 + 1")) == []


def test_squarefree_part():
    p = parse_unipoly("x^2 + 2x + 1")
    assert squarefree_part(p) == parse_unipoly("x + 1")


# ------------------------------------------------------------------ factor


def test_factor_over_Q_recombines():
    rng = random.Random(47)
    for _ in range(15):
        p = UniPoly([F(rng.randint(-5, 5)) for _ in range(rng.randint(2, 6))])
        if p.is_zero() or p.degree < 1:
            continue
        unit, facs = factor_over_Q(p)
        prod = UniPoly.const(unit)
        for h, m in facs:
            assert h.lc() == 1
            prod = prod * h**m
        assert prod == p


def test_rational_and_gaussian_roots():
    p = parse_unipoly("(x^2 + 1)*(x^2 + 4)*(x - 2)")
    assert rational_roots(p) == [(F(2), 1)]
    roots = gaussian_roots(p)
    assert sorted(str(r) for r, m in roots) == ["-2i", "-i", "2", "2i", "i"]
    assert all(m == 1 for _, m in roots)
    # multiplicity
    q = parse_unipoly("(x^2 + 1)^2")
    assert sorted((str(r), m) for r, m in gaussian_roots(q)) == [("-i", 2), ("i", 2)]


def test_is_squarefree():
    assert is_squarefree(parse_unipoly("x^2 + 1"))
    assert not is_squarefree(parse_unipoly("x^2 + 2x + 1"))


# ---------------------------------------------------------------- radicals


def test_radscalar_canonicalization():
    s = RadScalar(F(1), F(12))
    assert s.radicand == 3 and s.coeff == as_gauss(2)  # sqrt(12) = 2 sqrt(3)
    assert RadScalar(F(5)).is_rational_value()
    assert RadScalar(F(0), F(7)).is_zero()


def test_radscalar_arithmetic():
    r3 = RadScalar(F(1), F(3))
    assert r3 * r3 == RadScalar(F(3))
    assert r3 + r3 == RadScalar(F(2), F(3))
    assert (r3 / RadScalar(F(2))) * RadScalar(F(2)) == r3
    with pytest.raises(ValueError):
        r3 + RadScalar(F(1), F(2))  # mixed radicands are out of scope


def test_radpoly_str_and_json():
    rp = RadPoly(F(3), parse_unipoly("x + 1").to_field(FIELD_QI))
    d = rp.as_json()
    assert d["radicand"] == "3"
    assert conj(as_gauss(1)) == as_gauss(1)
