"""Cross-check suite: every symbolic identity against the matrix oracle.

Each check returns its maximum observed error so a report can show how far
below tolerance the build sits.  Exact polynomial identities report error
0.0 when they hold.  The suite is deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .chebyshev import chebyshev_u, closed_form, eval_univariate, u_half
from .engine import TraceEngine
from .polynomials import TracePolynomial, reduce_mod_kappa, kappa, X, ONE
from .region import point_from_pair
from .su2 import random_element, random_pairs, realize_point, word_traces
from .words import commutator, concat, power, GEN_A, GEN_B

_FAMILY_N = range(1, 13)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_error: float
    threshold: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return (
            f"{status} {self.name:34s} max_error={self.max_error:.3e} "
            f"threshold={self.threshold:.1e}{tail}"
        )


def _matrix_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def check_cayley_hamilton(rng: random.Random, samples: int) -> CheckResult:
    worst = 0.0
    eye = np.eye(2)
    for _ in range(samples):
        a = random_element(rng)
        ma = a.matrix()
        worst = max(worst, _matrix_norm(ma @ ma - a.trace() * ma + eye))
    return CheckResult("cayley_hamilton", worst < 1e-9, worst, 1e-9)


def check_trace_product_identity(rng: random.Random, samples: int) -> CheckResult:
    worst = 0.0
    for _ in range(samples):
        a, b = random_element(rng), random_element(rng)
        lhs = (a * b).trace() + (a * b.inverse()).trace()
        worst = max(worst, abs(lhs - a.trace() * b.trace()))
    return CheckResult("trace_product_identity", worst < 1e-9, worst, 1e-9)


def check_conjugation_trace(rng: random.Random, samples: int) -> CheckResult:
    worst = 0.0
    for _ in range(samples):
        a, b = random_element(rng), random_element(rng)
        worst = max(worst, abs((a * b * a.inverse()).trace() - b.trace()))
    return CheckResult("conjugation_trace", worst < 1e-9, worst, 1e-9)


def check_commutator_kappa(rng: random.Random, samples: int) -> CheckResult:
    kap = kappa()
    worst = 0.0
    for _ in range(samples):
        a, b = random_element(rng), random_element(rng)
        pt = point_from_pair(a, b)
        comm = a * b * a.inverse() * b.inverse()
        worst = max(worst, abs(comm.trace() - kap.eval_float(*pt.as_floats())))
    return CheckResult("commutator_kappa", worst < 1e-9, worst, 1e-9)


def check_matrix_power_chebyshev(rng: random.Random, samples: int) -> CheckResult:
    """A^n = U_{n-1}(x/2) A - U_{n-2}(x/2) I for n = 2..20."""
    count = max(1, samples // 10)
    worst = 0.0
    for _ in range(count):
        a = random_element(rng)
        x = a.trace()
        ma = a.matrix()
        an = ma.copy()
        for n in range(2, 21):
            an = an @ ma
            ca = eval_univariate(u_half(n - 1), x)
            ci = eval_univariate(u_half(n - 2), x)
            worst = max(worst, _matrix_norm(an - (ca * ma - ci * np.eye(2))))
    return CheckResult("matrix_power_chebyshev", worst < 1e-9, worst, 1e-9)


def check_pell_identity(rng: random.Random, samples: int) -> CheckResult:
    """U_n^2 + U_{n-1}^2 - 2x U_n U_{n-1} = 1 exactly, n = 1..50."""
    ok = True
    for n in range(1, 51):
        un = _embed_x(chebyshev_u(n).coeffs)
        um = _embed_x(chebyshev_u(n - 1).coeffs)
        if un * un + um * um - 2 * X * un * um != ONE:
            ok = False
            break
    return CheckResult("pell_identity_exact", ok, 0.0 if ok else 1.0, 0.0,
                       detail="n=1..50, constant term 1")


def _embed_x(coeffs) -> TracePolynomial:
    return TracePolynomial({(i, 0, 0): c for i, c in enumerate(coeffs) if c})


def check_closed_form_ab_bn(engine: TraceEngine) -> CheckResult:
    ok = all(
        closed_form("f_ab_bn", n) == engine.trace_poly(commutator(GEN_A, power(GEN_B, n)))
        for n in _FAMILY_N
    )
    return CheckResult("closed_form_ab_bn_exact", ok, 0.0 if ok else 1.0, 0.0,
                       detail="n=1..12")


def check_closed_form_a3_bn(engine: TraceEngine) -> CheckResult:
    ok = all(
        closed_form("f_a3_bn", n)
        == engine.trace_poly(commutator(power(GEN_A, 3), power(GEN_B, n)))
        for n in _FAMILY_N
    )
    return CheckResult("closed_form_a3_bn_exact", ok, 0.0 if ok else 1.0, 0.0,
                       detail="n=1..12")


def check_reduced_system_mod_kappa(engine: TraceEngine) -> CheckResult:
    ab = commutator(GEN_A, GEN_B)
    ok = True
    for n in _FAMILY_N:
        v = commutator(power(GEN_A, 3), power(GEN_B, n))
        if reduce_mod_kappa(closed_form("sys16", n)) != reduce_mod_kappa(
            engine.trace_poly(v)
        ):
            ok = False
            break
        if reduce_mod_kappa(closed_form("sys17", n)) != reduce_mod_kappa(
            engine.trace_poly(concat(ab, v))
        ):
            ok = False
            break
    return CheckResult("reduced_system_mod_kappa", ok, 0.0 if ok else 1.0, 0.0,
                       detail="n=1..12")


def _numeric_family_check(
    name: str, rng: random.Random, samples: int, form_id: str, word_for_n
) -> CheckResult:
    count = max(10, min(200, samples))
    a_arr, b_arr = random_pairs(rng, count)
    pts = np.stack(
        [2.0 * a_arr[:, 0], 2.0 * b_arr[:, 0],
         2.0 * _mul_re(a_arr, b_arr)], axis=1
    )
    worst = 0.0
    for n in (1, 2, 3, 5, 8, 12):
        form = closed_form(form_id, n)
        vals = form.eval_many_dd(pts)
        truth = word_traces(word_for_n(n), a_arr, b_arr)
        worst = max(worst, float(np.max(np.abs(vals - truth))))
    return CheckResult(name, worst < 1e-9, worst, 1e-9, detail="n in {1,2,3,5,8,12}")


def _mul_re(a_arr: np.ndarray, b_arr: np.ndarray) -> np.ndarray:
    return (
        a_arr[:, 0] * b_arr[:, 0]
        - a_arr[:, 1] * b_arr[:, 1]
        - a_arr[:, 2] * b_arr[:, 2]
        - a_arr[:, 3] * b_arr[:, 3]
    )


def check_family_eq12(rng: random.Random, samples: int) -> CheckResult:
    ab = commutator(GEN_A, GEN_B)

    def word_for_n(n):
        return concat(ab, commutator(GEN_A, power(GEN_B, n)))

    return _numeric_family_check(
        "product_family_m1_numeric", rng, samples, "f_abab_bn", word_for_n
    )


def check_family_eq13(rng: random.Random, samples: int) -> CheckResult:
    ab = commutator(GEN_A, GEN_B)

    def word_for_n(n):
        tail = concat(power(GEN_A, -1), power(GEN_B, -n))
        return concat(concat(ab, power(GEN_B, n)), tail)

    return _numeric_family_check(
        "conjugate_term_numeric", rng, samples, "tr_conj_term", word_for_n
    )


def check_family_eq14(rng: random.Random, samples: int) -> CheckResult:
    ab = commutator(GEN_A, GEN_B)

    def word_for_n(n):
        return concat(ab, commutator(power(GEN_A, 2), power(GEN_B, n)))

    return _numeric_family_check(
        "product_family_m2_numeric", rng, samples, "f_ab_a2bn", word_for_n
    )


def check_realize_round_trip(rng: random.Random, samples: int) -> CheckResult:
    worst = 0.0
    for _ in range(max(10, samples // 10)):
        a, b = random_element(rng), random_element(rng)
        pt = point_from_pair(a, b)
        a2, b2 = realize_point(pt)
        pt2 = point_from_pair(a2, b2)
        worst = max(
            worst,
            max(abs(u - v) for u, v in zip(pt.as_floats(), pt2.as_floats())),
        )
    return CheckResult("realize_round_trip", worst < 1e-8, worst, 1e-8)


def run_all(seed: int = 42, samples: int = 1000) -> list[CheckResult]:
    """Run the full identity suite; deterministic for fixed seed and samples."""
    engine = TraceEngine()
    results = []
    for fn in (
        check_cayley_hamilton,
        check_trace_product_identity,
        check_conjugation_trace,
        check_commutator_kappa,
        check_matrix_power_chebyshev,
    ):
        results.append(fn(random.Random(seed), samples))
    results.append(check_pell_identity(random.Random(seed), samples))
    results.append(check_closed_form_ab_bn(engine))
    results.append(check_closed_form_a3_bn(engine))
    results.append(check_reduced_system_mod_kappa(engine))
    for fn in (check_family_eq12, check_family_eq13, check_family_eq14,
               check_realize_round_trip):
        results.append(fn(random.Random(seed), samples))
    return results
