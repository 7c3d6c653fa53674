import random
from fractions import Fraction

import pytest

from su2words.polynomials import (
    ONE,
    TracePolynomial,
    X,
    Y,
    Z,
    constant,
    divmod_kappa,
    kappa,
    monomial,
    reduce_mod_kappa,
)


def test_ring_basics():
    assert (X + Y) * (X - Y) == X * X - Y * Y
    assert X * 0 == TracePolynomial()
    assert (X + 1) - (X + 1) == 0 * X
    assert 2 * X == X + X
    assert X**3 == X * X * X


def test_no_zero_coefficients_stored():
    p = X - X
    assert p.terms == {}
    assert p.is_zero()


def test_kappa_values():
    k = kappa()
    assert k.eval_exact(0, 1, 1) == 0
    assert k.eval_exact(2, 2, 2) == 2
    assert k.eval_exact(0, 0, 0) == -2


def test_eval_exact_rational():
    p = kappa()
    v = p.eval_exact(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))
    assert v == Fraction(1, 4) + Fraction(1, 9) + Fraction(1, 25) - Fraction(1, 30) - 2


def test_eval_float_matches_exact():
    rng = random.Random(1)
    p = kappa() * kappa() - 3 * X * Y + Z - 7
    for _ in range(100):
        x, y, z = (rng.uniform(-2, 2) for _ in range(3))
        exact = p.eval_exact(Fraction(x), Fraction(y), Fraction(z))
        assert abs(p.eval_float(x, y, z) - float(exact)) < 1e-12


def test_degree_and_derivative():
    p = kappa()
    assert p.total_degree() == 3
    assert p.derivative(0) == 2 * X - Y * Z
    assert p.derivative(2) == 2 * Z - X * Y


def test_reduce_mod_kappa_of_kappa_is_zero():
    assert reduce_mod_kappa(kappa()).is_zero()


def test_reduce_mod_kappa_z_squared():
    # z^2 = kappa + xyz - x^2 - y^2 + 2
    r = reduce_mod_kappa(Z * Z)
    assert r == X * Y * Z - X * X - Y * Y + 2 * ONE


def test_divmod_kappa_reconstructs(rng):
    for _ in range(50):
        terms = {}
        for _ in range(rng.randrange(1, 10)):
            e = (rng.randrange(4), rng.randrange(4), rng.randrange(6))
            terms[e] = rng.randrange(-50, 51)
        p = TracePolynomial(terms)
        q, r = divmod_kappa(p)
        assert q * kappa() + r == p
        assert r.degree(2) <= 1


def test_text_form_canonical_order():
    assert kappa().to_text() == "x^2 - x*y*z + y^2 + z^2 - 2"
    assert (X * Y - Z).to_text() == "x*y - z"
    assert TracePolynomial().to_text() == "0"
    assert constant(-5).to_text() == "-5"
    assert (3 * monomial(2, 1, 0)).to_text() == "3*x^2*y"


def test_json_round_trip():
    p = kappa() * kappa() - 12345678901234567890 * X
    data = p.to_json_dict()
    assert all(isinstance(t["c"], str) for t in data["terms"])
    assert TracePolynomial.from_json_dict(data) == p


def test_exponent_cap():
    with pytest.raises(OverflowError):
        monomial(2**16, 0, 0)


def test_immutability():
    with pytest.raises(AttributeError):
        X.terms = {}
