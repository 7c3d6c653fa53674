from fractions import Fraction

import pytest

from su2words.polynomials import kappa
from su2words.region import TracePoint, in_region
from su2words.su2 import evaluate_word, realize_point
from su2words.surjectivity import (
    CaseAnalysisX0,
    VERDICT_CERTIFIED,
    VERDICT_NO_WITNESS,
    attains_minus_two,
    build_system,
    case_analysis_x0,
    check_family,
    family_words,
    find_witness,
)
from su2words.words import commutator, parse_word, power, GEN_A, GEN_B


def test_build_system_trivial(engine):
    from su2words.polynomials import X, Y, Z

    system = build_system(GEN_A, GEN_B, engine)
    assert system.polynomials() == (X, Y, Z)


def test_build_system_family(engine):
    u, v, _ = family_words(3, 2)
    system = build_system(u, v, engine)
    assert system.f_u == kappa()


def test_find_witness_trivial_system(engine):
    system = build_system(GEN_A, GEN_B, engine)
    pt = find_witness(system)
    assert pt == TracePoint(Fraction(0), Fraction(0), Fraction(0))
    assert pt.exact
    assert kappa().eval_exact(*pt) == -2  # boundary membership is allowed


def test_find_witness_rejects_bad_params(engine):
    system = build_system(GEN_A, GEN_B, engine)
    with pytest.raises(ValueError):
        find_witness(system, step=0.7)
    with pytest.raises(ValueError):
        find_witness(system, tol=0.0)


def test_find_witness_m3_n2_is_paper_point(engine):
    u, v, _ = family_words(3, 2)
    pt = find_witness(build_system(u, v, engine))
    assert pt == TracePoint(Fraction(0), Fraction(1), Fraction(1))


def test_find_witness_none_for_m1_n3(engine):
    u, v, _ = family_words(1, 3)
    assert find_witness(build_system(u, v, engine)) is None


def test_attains_commutator(engine):
    pt = attains_minus_two(parse_word("[a,b]"), engine=engine)
    assert pt is not None
    assert kappa().eval_exact(*pt) == -2


def test_attains_empty_word_fails(engine):
    assert attains_minus_two(parse_word("aA"), engine=engine) is None


def test_attains_matches_witness_verdicts(engine):
    for m, n in [(3, 2), (3, 3), (1, 2), (1, 4)]:
        u, v, w = family_words(m, n)
        wit = find_witness(build_system(u, v, engine))
        att = attains_minus_two(w, engine=engine)
        assert (wit is None) == (att is None)


def test_witness_realizes_to_minus_two(engine):
    u, v, w = family_words(3, 5)
    pt = find_witness(build_system(u, v, engine))
    assert pt is not None and in_region(pt, 0.0)
    a, b = realize_point(pt)
    assert abs(evaluate_word(w, a, b).trace() + 2.0) < 1e-6


def test_check_family_small(engine):
    certs = check_family(3, [2, 3], engine=engine)
    assert certs[0].verdict == VERDICT_CERTIFIED
    assert certs[0].witness == TracePoint(Fraction(0), Fraction(1), Fraction(1))
    assert certs[0].residual == 0.0
    assert certs[1].verdict == VERDICT_NO_WITNESS
    assert certs[1].witness is None


def test_certificate_json_schema(engine):
    cert = check_family(1, [2], engine=engine)[0]
    data = cert.to_json_dict()
    assert set(data) == {
        "word", "m", "n", "verdict", "witness", "residual", "method", "params",
    }
    assert data["m"] == 1 and data["n"] == 2
    assert data["params"]["step"] == 0.05
    assert data["witness"]["exact"] is True


def test_jobs_parameter_deterministic(engine):
    u, v, _ = family_words(1, 5)
    system = build_system(u, v, engine)
    p1 = find_witness(system, jobs=1)
    p2 = find_witness(system, jobs=3)
    assert p1 == p2


def test_case_analysis_n2():
    record = case_analysis_x0(2)
    assert isinstance(record, CaseAnalysisX0)
    assert record.case4 is True
    assert record.witness == TracePoint(0, 1, 1)
    assert record.case1 is False and record.case2 is False


def test_case_analysis_n3():
    record = case_analysis_x0(3)
    assert not any((record.case1, record.case2, record.case3, record.case4))
    assert record.witness is None


def test_case_analysis_case1_never_holds():
    for n in range(1, 51):
        record = case_analysis_x0(n)
        assert record.case1 is False
        assert record.resultant != 0


def test_case_analysis_case4_periodicity():
    for n in range(1, 31):
        assert case_analysis_x0(n).case4 == (n % 3 == 2)


def test_case_analysis_case3_sign_flip_solutions():
    # honest evaluation of the reduced equations at y = -1: U = -V != 0
    # there, so solutions exist exactly when n = 2 mod 3 (the mirror
    # witnesses (0,-1,+-1)), contrary to the source's no-solution claim
    for n in range(1, 31):
        assert case_analysis_x0(n).case3 == (n % 3 == 2)


def test_case_analysis_rejects_bad_n():
    with pytest.raises(ValueError):
        case_analysis_x0(0)
