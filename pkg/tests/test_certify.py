"""Real-rootedness certificates via Hermite-matrix principal minors, and
ternary hyperbolicity checks."""

import random
from fractions import Fraction

import pytest

import corpus as C
import oracles as O
from specrep import certify_hyperbolic, certify_real_rooted, hermite_matrix
from specrep.certify import MINOR_CEILING
from specrep.errors import CeilingExceeded, PreconditionError
from specrep.exactalg import FIELD_Q, UniPoly, as_fraction, parse_bipoly
from specrep.hvpipeline import TernaryForm


def test_hermite_matrix_t2_minus_q():
    f = parse_bipoly("t^2 - x^2 - 1")
    H = hermite_matrix(f)
    q = UniPoly.x() ** 2 + 1
    assert H[0][0] == UniPoly.const(2)
    assert H[0][1].is_zero() and H[1][0].is_zero()
    assert H[1][1] == q * 2


def test_hermite_entries_are_power_sums():
    """H[i][j] evaluated at a equals the (i+j)-th power sum of f(a, .)."""
    rng = random.Random(61)
    for f in C.curated_curves():
        H = hermite_matrix(f)
        n = f.degree_t
        for _ in range(4):
            a = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
            ps = O.newton_power_sums(O.bipoly_at(f, a), 2 * n - 2)
            for i in range(n):
                for j in range(n):
                    assert as_fraction(H[i][j].evaluate(a)) == ps[i + j]


def test_certify_true_on_curated():
    for f in C.curated_curves():
        cert = certify_real_rooted(f)
        assert cert.verdict and cert.n == f.degree_t
        assert len(cert.minors) == 2 ** cert.n - 1


def test_certify_false_with_checkable_witness():
    f = parse_bipoly("t^2 + 1")
    cert = certify_real_rooted(f)
    assert not cert.verdict
    assert cert.witness_point == 0
    assert cert.witness_value < 0
    # direct evaluation of the violated minor
    got = as_fraction(cert.witness_minor.evaluate(cert.witness_point))
    assert got == cert.witness_value


def test_witness_against_fraction_oracle():
    """Oracle rebuild: Hermite submatrix at the witness point is negative."""
    f = parse_bipoly("t^3 - xt^2 + t - x")  # (t-x)(t^2+1): never real rooted
    cert = certify_real_rooted(f)
    assert not cert.verdict
    a = cert.witness_point
    ps = O.newton_power_sums(O.bipoly_at(f, a), 2 * cert.n - 2)
    sub = [[ps[i + j] for j in cert.witness_indices] for i in cert.witness_indices]
    assert O.det_fractions(sub) == cert.witness_value < 0


def test_ceiling():
    f = parse_bipoly("t^2 - x^2 - 1")
    with pytest.raises(CeilingExceeded):
        certify_real_rooted(f, ceiling=1)
    assert MINOR_CEILING == 12


def test_preconditions():
    with pytest.raises(PreconditionError):
        certify_real_rooted(parse_bipoly("xt^2 - 1"))  # not monic in t
    with pytest.raises(PreconditionError):
        certify_real_rooted(parse_bipoly("t^2 + i*t"))  # not rational


def test_hyperbolic_cone():
    cert = certify_hyperbolic("z^2 - x^2 - y^2", (0, 0, 1))
    assert cert.verdict
    cert = certify_hyperbolic("z^2 - x^2 - y^2", (1, 0, 0))
    assert not cert.verdict
    assert "negative at the direction" in cert.note


def test_hyperbolic_sphere_fails():
    cert = certify_hyperbolic("x^2 + y^2 + z^2", (0, 0, 1))
    assert not cert.verdict


def test_hyperbolic_zero_direction():
    with pytest.raises(PreconditionError):
        certify_hyperbolic("z^2 - x^2 - y^2", (1, 0, 1))  # F(e) = 0


def test_hyperbolic_accepts_form_object():
    F = TernaryForm("z^3 - z*x^2 - z*y^2", e=(0, 0, 1))
    assert certify_hyperbolic(F, (0, 0, 1)).verdict


def test_random_pencil_charpolys_certify():
    rng = random.Random(67)
    for _ in range(10):
        n = rng.randint(1, 4)
        f = C.random_hermitian_pencil(rng, n).charpoly_t()
        assert certify_real_rooted(f.rational_part()).verdict
