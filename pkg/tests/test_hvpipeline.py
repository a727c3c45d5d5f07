"""Hyperbolic ternary forms and definite determinantal pencils."""

import random
from fractions import Fraction

import pytest

import corpus as C
import oracles as O
from specrep import NOT_FOUND
from specrep.errors import NotHyperbolic, ParseError, PreconditionError
from specrep.exactalg import (
    FIELD_QI,
    GaussRational,
    PolyMatrix,
    RadScalar,
    UniPoly,
    parse_bipoly,
)
from specrep.hvpipeline import (
    Pencil,
    TernaryForm,
    check_degree_bound,
    degree_valuation,
    dehomogenize,
    hv_representation,
    normalize_direction,
)


CONE = "z^2 - x^2 - y^2"


def mv3(A, v):
    return tuple(sum(A[r][c] * v[c] for c in range(3)) for r in range(3))


def pencil_det(pencil, v):
    return O.naive_det([list(row) for row in pencil.evaluate(v)])


def test_ternary_form_basics():
    F = TernaryForm(CONE)
    assert F.degree == 2
    assert F.evaluate((0, 0, 1)) == 1
    assert F.evaluate((3, 4, 5)) == 0
    G = TernaryForm("z - x") * TernaryForm("z + x")
    assert G == TernaryForm("z^2 - x^2")
    H = F.substitute(((0, 1, 0), (1, 0, 0), (0, 0, 1)))  # swap x and y
    assert H == F
    assert str(TernaryForm("z^2-x^2-y^2")) == "z^2 - x^2 - y^2"


def test_ternary_form_rejections():
    with pytest.raises(PreconditionError):
        TernaryForm("z^2 - x")  # not homogeneous
    with pytest.raises(PreconditionError):
        TernaryForm("z^2 - i*x^2")
    with pytest.raises(PreconditionError):
        TernaryForm("0")
    with pytest.raises(ParseError):
        TernaryForm("z^2 - t^2")
    with pytest.raises(PreconditionError):
        TernaryForm(CONE, e=(1, 2))


def test_normalize_direction():
    F = TernaryForm(CONE)
    prime, U = normalize_direction(F, (1, 0, 2))
    assert prime.evaluate((0, 0, 1)) == 1
    fe = F.evaluate((1, 0, 2))
    rng = random.Random(97)
    for _ in range(8):
        v = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        assert prime.evaluate(mv3(U, v)) == F.evaluate(v) / fe
    with pytest.raises(PreconditionError):
        normalize_direction(F)  # no direction anywhere
    with pytest.raises(PreconditionError):
        normalize_direction(F, (1, 0, 1))  # on the cone


def test_dehomogenize():
    F, _ = normalize_direction(TernaryForm(CONE), (0, 0, 1))
    assert dehomogenize(F) == parse_bipoly("t^2 - x^2 - 1")
    with pytest.raises(PreconditionError):
        dehomogenize(TernaryForm("2z^2 - x^2 - y^2"))  # F(0,0,1) != 1


def test_degree_valuation_and_bound():
    x = UniPoly.x(FIELD_QI)
    Z = UniPoly.zero(FIELD_QI)
    M = PolyMatrix([[x * x, Z], [Z, UniPoly.one(FIELD_QI)]], FIELD_QI)
    assert degree_valuation(M) == -2
    with pytest.raises(ValueError):
        degree_valuation(PolyMatrix([[Z, Z], [Z, Z]], FIELD_QI))
    # zero matrix pairs only with t^n
    assert check_degree_bound(PolyMatrix([[Z, Z], [Z, Z]], FIELD_QI), parse_bipoly("t^2"))
    assert not check_degree_bound(PolyMatrix([[Z, Z], [Z, Z]], FIELD_QI), parse_bipoly("t^2 - x"))
    assert not check_degree_bound(M, parse_bipoly("t^2"))
    # nilpotent non-symmetric leading form breaks the identity
    N = PolyMatrix([[Z, x], [Z, Z]], FIELD_QI)
    assert not check_degree_bound(N, N.charpoly_t())


def test_degree_bound_on_random_symmetric():
    rng = random.Random(89)
    for _ in range(10):
        n = rng.randint(2, 3)
        M = C.random_symmetric_polymatrix(rng, n)
        assert check_degree_bound(M, M.charpoly_t())


def test_hv_hermitian_cone_frozen():
    p = hv_representation(CONE, kind="hermitian", e=(0, 0, 1))
    assert p.kind == "hermitian" and p.n == 2
    assert p.scale == (Fraction(1), 1)
    i1 = GaussRational(Fraction(0), Fraction(1))
    assert p.A == ((RadScalar(0), RadScalar(-1)), (RadScalar(-1), RadScalar(0)))
    assert p.B == ((RadScalar(0), RadScalar(-i1)), (RadScalar(i1), RadScalar(0)))
    assert p.C == ((RadScalar(1), RadScalar(0)), (RadScalar(0), RadScalar(1)))
    F = TernaryForm(CONE)
    for v in [(1, 2, 3), (0, 1, 1), (-2, 5, 7), (1, 0, 0), (0, 0, 1), (3, -4, 5)]:
        assert pencil_det(p, v) == F.evaluate(v)


def test_hv_symmetric_cone_frozen():
    p = hv_representation(CONE, kind="symmetric", e=(0, 0, 1), bound=3)
    assert p.kind == "symmetric" and p.n == 2
    assert p.A == ((RadScalar(1), RadScalar(0)), (RadScalar(0), RadScalar(-1)))
    assert p.B == ((RadScalar(0), RadScalar(-1)), (RadScalar(-1), RadScalar(0)))
    assert p.C == ((RadScalar(1), RadScalar(0)), (RadScalar(0), RadScalar(1)))
    F = TernaryForm(CONE)
    for v in [(1, 2, 3), (0, 1, 1), (-2, 5, 7), (2, -1, 4)]:
        assert pencil_det(p, v) == F.evaluate(v)


def test_hv_sqrt_scale_folds():
    F = TernaryForm("2z^2 - x^2 - y^2")
    p = hv_representation(F, kind="hermitian", e=(0, 0, 1))
    assert p.scale == (Fraction(1), 1)
    # L(e) = sqrt(2)*I
    Le = p.evaluate((0, 0, 1))
    assert Le[0][0] == RadScalar.sqrt(2) and Le[1][1] == RadScalar.sqrt(2)
    for v in [(1, 2, 3), (0, 1, 1), (-1, 4, 2)]:
        assert pencil_det(p, v) == F.evaluate(v)


def test_hv_symbolic_scale_cubic():
    # F(e) = 2 and n = 3: no exact cube root, the scale stays symbolic
    base = TernaryForm("z^3 + 2x^3 - 3x^2z + 9xy^2 - 9y^2z")
    F = base.scaled(2)
    p = hv_representation(F, kind="hermitian", e=(0, 0, 1))
    assert p.scale == (Fraction(2), 3)
    for v in [(1, 1, 5), (0, 1, 4), (-1, 2, 6)]:
        assert pencil_det(p, v) == RadScalar.rational(F.evaluate(v) / 2)


def test_hv_pencil_curve_instances():
    # homogenizations of the curated pencil curves, certified end to end
    cubic = TernaryForm("z^3 + 2x^3 - 3x^2z + 9xy^2 - 9y^2z")
    quartic = TernaryForm("z^4 - 2x^2z^2 - 5y^2z^2 + x^4 + 5x^2y^2 + 4y^4")
    for F, fstr in [
        (cubic, "t^3 - 3x^2t - 9t + 2x^3 + 9x"),
        (quartic, "t^4 - 2x^2t^2 - 5t^2 + x^4 + 5x^2 + 4"),
    ]:
        assert dehomogenize(F.with_direction((0, 0, 1))) == parse_bipoly(fstr)
        p = hv_representation(F, kind="hermitian", e=(0, 0, 1))
        assert p.scale == (Fraction(1), 1)
        n = p.n
        for x0 in range(n + 1):
            for y0 in range(n + 1):
                v = (x0, y0, 1)
                assert pencil_det(p, v) == F.evaluate(v)


def test_hv_factor_path():
    F = TernaryForm("z^2 - x^2")
    p = hv_representation(F, kind="hermitian", e=(0, 0, 1), factors=["z - x", "z + x"])
    assert p.factors == (TernaryForm("z - x"), TernaryForm("z + x"))
    assert "factors" in p.as_json()
    for v in [(1, 2, 3), (2, 0, 1), (-3, 1, 2)]:
        assert pencil_det(p, v) == F.evaluate(v)
    with pytest.raises(ValueError):
        hv_representation(F, e=(0, 0, 1), factors=["z - x", "z - x"])
    sq = TernaryForm("x^2 - 2xz + z^2")
    with pytest.raises(NotHyperbolic):
        hv_representation(sq, e=(0, 0, 1), factors=["x - z", "x - z"])


def test_hv_rejections():
    with pytest.raises(PreconditionError):
        hv_representation(CONE, kind="hermitian")  # no direction
    with pytest.raises(PreconditionError):
        hv_representation(CONE, kind="hermitian", e=(1, 0, 1))  # F(e) = 0
    with pytest.raises(NotHyperbolic):
        hv_representation(CONE, kind="hermitian", e=(1, 0, 0))  # F(e) < 0
    with pytest.raises(NotHyperbolic):
        hv_representation("x^2 + y^2 + z^2", kind="hermitian", e=(0, 0, 1))
    with pytest.raises(ValueError):
        hv_representation(CONE, kind="unitary", e=(0, 0, 1))


def test_hv_symmetric_not_found_passthrough():
    out = hv_representation("z^2 - 2x^2 - 2y^2", kind="symmetric", e=(0, 0, 1), bound=3)
    assert out is NOT_FOUND


def test_pencil_json_shape():
    p = hv_representation(CONE, kind="hermitian", e=(0, 0, 1))
    j = p.as_json()
    assert set(j) == {"kind", "n", "A", "B", "C", "e", "scale", "form", "witness"}
    assert set(j["witness"]) == {"U", "rep"}
    assert j["scale"] == {"base": "1", "root": 1}
