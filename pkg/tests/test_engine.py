import itertools
import random

import pytest

from su2words.engine import EngineBudgetError, TraceEngine
from su2words.polynomials import X, Y, Z, constant, kappa
from su2words.region import point_from_pair
from su2words.su2 import evaluate_word, random_element
from su2words.words import Word, canonical_key, conjugate, inverse, parse_word
from conftest import random_reduced_word


def canonical_corpus(max_len):
    """All canonical trace classes of reduced words of length <= max_len."""
    keys = set()
    for L in range(max_len + 1):
        for letters in itertools.product(range(4), repeat=L):
            if any(letters[i] == letters[i + 1] ^ 1 for i in range(L - 1)):
                continue
            keys.add(canonical_key(letters))
    return sorted(keys)


def test_base_cases(engine):
    assert engine.trace_poly(parse_word("aA")) == constant(2)
    assert engine.trace_poly(parse_word("a")) == X
    assert engine.trace_poly(parse_word("b")) == Y
    assert engine.trace_poly(parse_word("ab")) == Z


def test_commutator_is_kappa(engine):
    assert engine.trace_poly(parse_word("[a,b]")) == kappa()


def test_inverse_letter_identity(engine):
    assert engine.trace_poly(parse_word("aB")) == X * Y - Z


def test_square_identity(engine):
    assert engine.trace_poly(parse_word("a^2")) == X * X - 2 * constant(1)


def test_commutator_times_a(engine):
    expected = X * kappa() - X
    assert engine.trace_poly(parse_word("abABa")) == expected


def test_oracle_agreement_short_words(engine, rng):
    pairs = [(random_element(rng), random_element(rng)) for _ in range(50)]
    worst = 0.0
    for key in canonical_corpus(5):
        w = Word(key)
        poly = engine.trace_poly(w)
        for a, b in pairs:
            pt = point_from_pair(a, b)
            err = abs(poly.eval_float(*pt.as_floats()) - evaluate_word(w, a, b).trace())
            worst = max(worst, err)
    assert worst < 1e-9


def test_inversion_invariance(engine, rng):
    for _ in range(100):
        w = random_reduced_word(rng, 10)
        assert engine.trace_poly(inverse(w)) == engine.trace_poly(w)


def test_conjugation_invariance(engine, rng):
    for _ in range(100):
        w = random_reduced_word(rng, 10)
        g = random_reduced_word(rng, 4)
        assert engine.trace_poly(conjugate(w, g)) == engine.trace_poly(w)


def test_trace_values_lie_in_range(engine, rng):
    words = [Word(k) for k in canonical_corpus(4)]
    for _ in range(200):
        a, b = random_element(rng), random_element(rng)
        pt = point_from_pair(a, b)
        for w in words:
            v = engine.trace_poly(w).eval_float(*pt.as_floats())
            assert -2 - 1e-9 <= v <= 2 + 1e-9


def test_degree_bounded_by_length(engine, rng):
    for _ in range(100):
        w = random_reduced_word(rng, 12)
        assert engine.trace_poly(w).total_degree() <= max(len(w), 0) or w.is_identity()


def test_memo_determinism():
    w = parse_word("[[a,b],[a^3,b^2]]")
    fresh_1 = TraceEngine().trace_poly(w)
    engine2 = TraceEngine()
    # order of queries must not matter
    engine2.trace_poly(parse_word("a b a B"))
    engine2.trace_poly(parse_word("[a^3,b^2]"))
    assert engine2.trace_poly(w) == fresh_1


def test_node_budget():
    tiny = TraceEngine(node_budget=3)
    with pytest.raises(EngineBudgetError):
        tiny.trace_poly(parse_word("[[a,b],[a^3,b^4]]"))


def test_family_word_at_n2(engine):
    # f_w = kappa(f_u, f_v, f_uv) must hold as a polynomial identity
    from su2words.surjectivity import build_system, family_words

    u, v, w = family_words(3, 2)
    system = build_system(u, v, engine)
    f_w = engine.trace_poly(w)
    p, q, r = system.f_u, system.f_v, system.f_uv
    assert f_w == p * p + q * q + r * r - p * q * r - 2 * constant(1)
