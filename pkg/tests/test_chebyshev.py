import math
import random

import pytest

from su2words.chebyshev import (
    ChebyshevU,
    chebyshev_u,
    closed_form,
    embed_univariate,
    eval_univariate,
    matrix_power_expand,
    u_half,
    univariate_resultant,
)
from su2words.polynomials import ONE, X, reduce_mod_kappa
from su2words.words import commutator, concat, parse_word, power, GEN_A, GEN_B


def test_chebyshev_base_cases():
    assert chebyshev_u(0).coeffs == (1,)
    assert chebyshev_u(1).coeffs == (0, 2)
    assert chebyshev_u(2).coeffs == (-1, 0, 4)
    assert chebyshev_u(3).coeffs == (0, -4, 0, 8)


def test_chebyshev_recurrence_exact():
    for n in range(2, 40):
        un = chebyshev_u(n)
        um = chebyshev_u(n - 1)
        uk = chebyshev_u(n - 2)
        two_x_um = (0,) + tuple(2 * c for c in um.coeffs)
        expected = tuple(
            a - b for a, b in zip(two_x_um, uk.coeffs + (0,) * (n + 1 - len(uk.coeffs)))
        )
        assert un.coeffs == expected


def test_chebyshev_sine_ratio():
    theta = 0.3
    x = math.cos(theta)
    for n in range(8):
        expected = math.sin((n + 1) * theta) / math.sin(theta)
        assert abs(eval_univariate(chebyshev_u(n).coeffs, x) - expected) < 1e-12


def test_u_half_matches_substitution():
    from fractions import Fraction

    for n in range(12):
        v = u_half(n)
        u = chebyshev_u(n).coeffs
        for t in (Fraction(1, 3), Fraction(-7, 5), 2):
            assert eval_univariate(v, t) == eval_univariate(u, Fraction(t, 2))


def test_matrix_power_expand_values():
    assert matrix_power_expand(2) == ((0, 1), (1,))          # A^2 = xA - I
    assert matrix_power_expand(3) == ((-1, 0, 1), (0, 1))    # (x^2-1)A - xI
    assert matrix_power_expand(4) == ((0, -2, 0, 1), (-1, 0, 1))


def test_matrix_power_expand_rejects_small_n():
    with pytest.raises(ValueError):
        matrix_power_expand(1)


def test_pell_identity_with_constant_one():
    for n in range(1, 51):
        un = embed_univariate(chebyshev_u(n).coeffs, 0)
        um = embed_univariate(chebyshev_u(n - 1).coeffs, 0)
        assert un * un + um * um - 2 * X * un * um == ONE


def test_closed_form_boundary_n1():
    from su2words.polynomials import kappa

    assert closed_form("f_ab_bn", 1) == kappa()
    lead = X**4 - 2 * X**2 + ONE
    assert closed_form("f_a3_bn", 1) == lead * kappa() - 2 * X**4 + 4 * X**2


def test_closed_form_unknown_id():
    with pytest.raises(ValueError):
        closed_form("nope", 3)
    with pytest.raises(ValueError):
        closed_form("f_ab_bn", 0)


def test_closed_forms_match_engine_exactly(engine):
    ab = commutator(GEN_A, GEN_B)
    for n in range(1, 13):
        bn = power(GEN_B, n)
        assert closed_form("f_ab_bn", n) == engine.trace_poly(commutator(GEN_A, bn))
        assert closed_form("f_a3_bn", n) == engine.trace_poly(
            commutator(power(GEN_A, 3), bn)
        )
        assert closed_form("f_abab_bn", n) == engine.trace_poly(
            concat(ab, commutator(GEN_A, bn))
        )
        tail = concat(power(GEN_A, -1), power(GEN_B, -n))
        assert closed_form("tr_conj_term", n) == engine.trace_poly(
            concat(concat(ab, bn), tail)
        )
        assert closed_form("f_ab_a2bn", n) == engine.trace_poly(
            concat(ab, commutator(power(GEN_A, 2), bn))
        )


def test_reduced_system_matches_engine_mod_kappa(engine):
    ab = commutator(GEN_A, GEN_B)
    exact16, exact17 = [], []
    for n in range(1, 13):
        v = commutator(power(GEN_A, 3), power(GEN_B, n))
        s16, s17 = closed_form("sys16", n), closed_form("sys17", n)
        assert reduce_mod_kappa(s16) == reduce_mod_kappa(engine.trace_poly(v))
        assert reduce_mod_kappa(s17) == reduce_mod_kappa(
            engine.trace_poly(concat(ab, v))
        )
        exact16.append(s16 == engine.trace_poly(v))
        exact17.append(s17 == engine.trace_poly(concat(ab, v)))
    # the exact-vs-mod-kappa status must not flip across n
    assert len(set(exact16)) == 1
    assert len(set(exact17)) == 1


def test_sys_values_at_witness():
    assert closed_form("sys16", 2).eval_exact(0, 1, 1) == 0
    assert closed_form("sys17", 2).eval_exact(0, 1, 1) == 0


def test_sys16_is_twice_halved_source_form():
    # the source derivation divides the reduced equation by 2; same zero set
    from su2words.chebyshev import embed_univariate
    from su2words.polynomials import Y

    for n in range(1, 8):
        u = embed_univariate(u_half(n - 1), 1)
        v = embed_univariate(u_half(n - 2), 1)
        lead = X**4 - 2 * X**2 + ONE
        halved = lead * (v * v) - lead * Y * (u * v) - X**4 + 2 * X**2
        assert closed_form("sys16", n) == 2 * halved


def test_resultant_small_cases():
    # res(t, 1) = 1; res(t^2 - 1, t) = -1
    assert univariate_resultant((0, 1), (1,)) == 1
    assert univariate_resultant((-1, 0, 1), (0, 1)) == -1
    # common root: res(t^2 - 1, t - 1) = 0
    assert univariate_resultant((-1, 0, 1), (-1, 1)) == 0


def test_resultant_against_root_products():
    import numpy as np

    rng = random.Random(7)
    for _ in range(20):
        dp = rng.randrange(1, 5)
        dq = rng.randrange(1, 5)
        p = tuple(rng.randrange(-5, 6) for _ in range(dp)) + (rng.randrange(1, 4),)
        q = tuple(rng.randrange(-5, 6) for _ in range(dq)) + (rng.randrange(1, 4),)
        res = univariate_resultant(p, q)
        roots = np.roots(list(reversed(q)))
        prod = q[-1] ** dp * np.prod(
            [eval_univariate(p, complex(r)) for r in roots]
        ) * (-1) ** (dp * dq)
        assert abs(complex(res) - prod) < 1e-4 * max(1.0, abs(complex(res)))


def test_consecutive_u_half_coprime():
    for n in range(2, 51):
        assert univariate_resultant(u_half(n - 1), u_half(n - 2)) != 0


def test_chebyshev_u_type():
    u = chebyshev_u(5)
    assert isinstance(u, ChebyshevU)
    assert u.n == 5
    assert u(0.25) == eval_univariate(u.coeffs, 0.25)
