"""Surjectivity of word maps on SU(2).

Two equivalent criteria drive the decision.  A word map is surjective iff
its trace map attains -2 somewhere on the region T; for commutator-shaped
words w = [u, v] this is equivalent to the system f_u = f_v = f_uv = 0
having a solution in T.

The search sweeps a dilated grid and refines the best candidates, then
tries rational snapping (exact certificates) and a high-precision Newton
polish with symbolic Jacobians.  Trace values on the grid come from
realized matrix pairs rather than the expanded polynomials: for the larger
family words the integer coefficients grow past 2^53 and monomial-basis
float evaluation drowns in cancellation, while quaternion products stay
accurate near machine precision at any word length.  Final acceptance of
any witness rests on exactly evaluated rational residuals, so no float
noise can certify a point.

Absence of a witness is reported as NoWitnessFound and never as a proof of
non-surjectivity.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .chebyshev import eval_univariate, u_half, univariate_resultant
from .engine import TraceEngine
from .polynomials import KAPPA, TracePolynomial, kappa_of
from .region import TracePoint, grid_axis, in_region
from .su2 import evaluate_word, realize_point
from .words import Word, commutator, concat, power, render, GEN_A, GEN_B

VERDICT_CERTIFIED = "SurjectiveCertified"
VERDICT_NUMERIC = "SurjectiveNumeric"
VERDICT_NO_WITNESS = "NoWitnessFound"

METHOD_RATIONAL = "RationalExact"
METHOD_GRID_NEWTON = "GridNewton"
METHOD_ATTAINS = "TraceAttainsMinusTwo"

DEFAULT_STEP = 0.05
DEFAULT_TOL = 1e-10
NEWTON_ITERATIONS = 50
CANDIDATE_COUNT = 100
SNAP_DENOMINATOR = 12
_POLISH_COUNT = 3
_POLISH_RESIDUAL = 1e-8   # float residual floor that still deserves a polish
_SNAP_RESIDUAL = 1e-6
_MP_DPS = 60


class PathDisagreementError(RuntimeError):
    """The two decision paths returned different verdicts for one word."""


@dataclass(frozen=True)
class CommutatorSystem:
    """Trace polynomials of u, v and uv for a commutator word [u, v].

    The source words, when known, let the search evaluate traces through
    matrix realizations instead of the expanded polynomials.
    """

    f_u: TracePolynomial
    f_v: TracePolynomial
    f_uv: TracePolynomial
    word_u: Word | None = None
    word_v: Word | None = None

    def polynomials(self) -> tuple[TracePolynomial, ...]:
        return (self.f_u, self.f_v, self.f_uv)

    def words(self) -> tuple[Word, Word, Word] | None:
        if self.word_u is None or self.word_v is None:
            return None
        return (self.word_u, self.word_v, concat(self.word_u, self.word_v))


def build_system(u: Word, v: Word, engine: TraceEngine | None = None) -> CommutatorSystem:
    engine = engine or TraceEngine()
    return CommutatorSystem(
        engine.trace_poly(u),
        engine.trace_poly(v),
        engine.trace_poly(concat(u, v)),
        word_u=u,
        word_v=v,
    )


@dataclass(frozen=True)
class SearchParams:
    step: float = DEFAULT_STEP
    tol: float = DEFAULT_TOL
    newton_iterations: int = NEWTON_ITERATIONS
    candidates: int = CANDIDATE_COUNT
    snap_denominator: int = SNAP_DENOMINATOR
    jobs: int = 1

    def to_json_dict(self) -> dict:
        return {
            "step": self.step,
            "tol": self.tol,
            "newton_iterations": self.newton_iterations,
            "candidates": self.candidates,
            "snap_denominator": self.snap_denominator,
        }


@dataclass(frozen=True)
class SurjectivityCertificate:
    word: Word
    verdict: str
    witness: TracePoint | None
    residual: float
    method: str
    params: SearchParams
    m: int | None = None
    n: int | None = None

    def surjective(self) -> bool:
        return self.verdict in (VERDICT_CERTIFIED, VERDICT_NUMERIC)

    def to_json_dict(self) -> dict:
        return {
            "word": render(self.word),
            "m": self.m,
            "n": self.n,
            "verdict": self.verdict,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "residual": self.residual,
            "method": self.method,
            "params": self.params.to_json_dict(),
        }


# -- realized grid -------------------------------------------------------------


class OracleGrid:
    """Lattice points of the dilated region with realized quaternion pairs.

    One realization serves every word evaluated on the same grid, so family
    sweeps reuse it across n.
    """

    def __init__(self, step: float, jobs: int = 1):
        axis = grid_axis(step)
        bound = 2.0 + step
        xs, ys, zs = np.meshgrid(axis, axis, axis, indexing="ij")
        kap = (
            xs * xs + ys * ys + zs * zs - xs * ys * zs - 2.0
        )
        mask = np.abs(kap) <= bound
        self.step = step
        self.jobs = max(1, jobs)
        self.x = xs[mask]
        self.y = ys[mask]
        self.z = zs[mask]
        self.a_quat, self.b_quat = _realize_batch(self.x, self.y, self.z)

    def word_traces(self, w: Word) -> np.ndarray:
        n = len(self.x)
        if self.jobs == 1:
            return _word_traces_chunk(w, self.a_quat, self.b_quat)
        chunk = 1 << 16
        spans = [(i, min(i + chunk, n)) for i in range(0, n, chunk)]
        out = np.empty(n)
        def run(span):
            lo, hi = span
            out[lo:hi] = _word_traces_chunk(
                w, np.ascontiguousarray(self.a_quat[:, lo:hi]),
                np.ascontiguousarray(self.b_quat[:, lo:hi]))
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            list(pool.map(run, spans))
        return out


_GRID_CACHE: dict[float, OracleGrid] = {}


def _oracle_grid(step: float, jobs: int) -> OracleGrid:
    g = _GRID_CACHE.get(step)
    if g is None:
        g = OracleGrid(step, jobs)
        _GRID_CACHE.clear()
        _GRID_CACHE[step] = g
    g.jobs = max(1, jobs)
    return g


def _realize_batch(x: np.ndarray, y: np.ndarray, z: np.ndarray):
    """Quaternion pairs with tr A = x, tr B = y and tr AB as close to z as
    the region allows (the z coordinate clamps at the feasibility boundary).

    Components are stored as (4, N) arrays so the hot multiply loop works on
    contiguous rows.
    """
    ca = np.clip(x / 2.0, -1.0, 1.0)
    cb = np.clip(y / 2.0, -1.0, 1.0)
    sa = np.sqrt(np.maximum(0.0, 1.0 - ca * ca))
    sb = np.sqrt(np.maximum(0.0, 1.0 - cb * cb))
    denom = sa * sb
    safe = np.where(denom > 1e-15, denom, 1.0)
    cphi = np.clip((ca * cb - z / 2.0) / safe, -1.0, 1.0)
    sphi = np.sqrt(np.maximum(0.0, 1.0 - cphi * cphi))
    n = len(x)
    zero = np.zeros(n)
    a = np.array([ca, sa, zero, zero])
    b = np.array([cb, sb * cphi, sb * sphi, zero])
    return a, b


def _word_traces_chunk(w: Word, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """tr w at realized pairs; a, b are (4, N) component arrays."""
    a_inv = np.array([a[0], -a[1], -a[2], -a[3]])
    b_inv = np.array([b[0], -b[1], -b[2], -b[3]])
    images = (a, a_inv, b, b_inv)
    cur = np.zeros_like(a)
    cur[0] = 1.0
    buf = np.empty_like(cur)
    for i, letter in enumerate(w.letters):
        q = images[letter]
        a0, a1, a2, a3 = cur
        b0, b1, b2, b3 = q
        np.multiply(a0, b0, out=buf[0])
        buf[0] -= a1 * b1
        buf[0] -= a2 * b2
        buf[0] -= a3 * b3
        np.multiply(a0, b1, out=buf[1])
        buf[1] += a1 * b0
        buf[1] += a2 * b3
        buf[1] -= a3 * b2
        np.multiply(a0, b2, out=buf[2])
        buf[2] -= a1 * b3
        buf[2] += a2 * b0
        buf[2] += a3 * b1
        np.multiply(a0, b3, out=buf[3])
        buf[3] += a1 * b2
        buf[3] -= a2 * b1
        buf[3] += a3 * b0
        cur, buf = buf, cur
        if i % 64 == 63:
            cur /= np.sqrt(cur[0] ** 2 + cur[1] ** 2 + cur[2] ** 2 + cur[3] ** 2)
    cur /= np.sqrt(cur[0] ** 2 + cur[1] ** 2 + cur[2] ** 2 + cur[3] ** 2)
    return 2.0 * cur[0]


# -- scoring -------------------------------------------------------------------


class _Objective:
    """Residual of a word system (or shifted value of one word) at points."""

    def __init__(self, words_: Sequence[Word] | None, polys: Sequence[TracePolynomial],
                 minimize_value: bool):
        self.words = words_
        self.polys = polys
        self.minimize_value = minimize_value

    def grid_scores(self, g: OracleGrid) -> np.ndarray:
        if self.words is not None:
            vals = [g.word_traces(w) for w in self.words]
        else:
            pts = np.stack([g.x, g.y, g.z], axis=1)
            vals = [p.eval_many(pts) for p in self.polys]
        if self.minimize_value:
            return vals[0] + 2.0
        total = np.zeros_like(vals[0])
        for v in vals:
            total += v * v
        return total

    def score_batch(self, pts: np.ndarray) -> np.ndarray:
        """Scores at an (N, 3) array of points."""
        if self.words is not None:
            a, b = _realize_batch(pts[:, 0], pts[:, 1], pts[:, 2])
            vals = [_word_traces_chunk(w, a, b) for w in self.words]
        else:
            vals = [p.eval_many(pts) for p in self.polys]
        if self.minimize_value:
            return np.abs(vals[0] + 2.0)
        total = np.zeros(len(pts))
        for v in vals:
            total += v * v
        return total

    def score_at(self, p: np.ndarray) -> float:
        return float(self.score_batch(np.asarray(p, dtype=float).reshape(1, 3))[0])


def _scan(objective: _Objective, step: float, jobs: int, keep: int):
    """Best `keep` grid points by score; ties prefer the lexicographically
    greatest point so mirror-symmetric solutions resolve deterministically."""
    g = _oracle_grid(step, jobs)
    scores = objective.grid_scores(g)
    if objective.minimize_value:
        scores = np.abs(scores)
    k = min(keep, len(scores))
    if k == 0:
        return []
    idx = np.argpartition(scores, k - 1)[:k]
    cands = [
        (float(scores[i]), float(g.x[i]), float(g.y[i]), float(g.z[i]))
        for i in idx
    ]
    cands.sort(key=lambda t: (t[0], -t[1], -t[2], -t[3]))
    return cands


# -- refinement ------------------------------------------------------------------


def _pattern_refine_batch(
    objective: _Objective,
    starts: np.ndarray,
    step: float,
    dilation: float,
    max_rounds: int = 250,
) -> tuple[np.ndarray, np.ndarray]:
    """Derivative-free shrinking descent, run in lockstep over all starts.

    Each round probes +-h along every coordinate for every still-active
    candidate in one batched evaluation, moves to the best improving probe,
    and halves h where nothing improved.
    """
    pts = starts.copy()
    k = len(pts)
    best = objective.score_batch(pts)
    h = np.full(k, step)
    lo, hi = -2.0 - dilation, 2.0 + dilation
    offsets = np.array(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
        dtype=float,
    )
    for _ in range(max_rounds):
        # candidates stuck high once the probe radius is tiny cannot recover
        # enough orders of magnitude to matter for snapping or polishing
        active = (h > 1e-9) & ~((h < 1e-5) & (best > 1e-4))
        if not np.any(active):
            break
        idx = np.nonzero(active)[0]
        probes = pts[idx, None, :] + offsets[None, :, :] * h[idx, None, None]
        probes = np.clip(probes, lo, hi)
        flat = probes.reshape(-1, 3)
        kap = (
            flat[:, 0] ** 2 + flat[:, 1] ** 2 + flat[:, 2] ** 2
            - flat[:, 0] * flat[:, 1] * flat[:, 2] - 2.0
        )
        feasible = np.abs(kap) <= 2.0 + dilation
        scores = np.full(len(flat), np.inf)
        if np.any(feasible):
            scores[feasible] = objective.score_batch(flat[feasible])
        scores = scores.reshape(len(idx), 6)
        pick = np.argmin(scores, axis=1)
        pick_scores = scores[np.arange(len(idx)), pick]
        improved = pick_scores < best[idx]
        moved = idx[improved]
        pts[moved] = probes[improved, pick[improved]]
        best[moved] = pick_scores[improved]
        stuck = idx[~improved]
        h[stuck] *= 0.5
    return pts, best


def _snap_candidate(
    polys: Sequence[TracePolynomial], p: np.ndarray, max_den: int,
    cache: dict | None = None,
) -> TracePoint | None:
    """Round to denominators <= max_den and verify exactly.

    Many refined candidates collapse onto the same rational point, so the
    exact verification is memoized per search.
    """
    coords = tuple(Fraction(float(v)).limit_denominator(max_den) for v in p)
    if cache is not None and coords in cache:
        return cache[coords]
    pt = TracePoint(*coords)
    result: TracePoint | None = pt
    if not in_region(pt, 0.0):
        result = None
    else:
        for poly in polys:
            if poly.eval_exact(*coords) != 0:
                result = None
                break
    if cache is not None:
        cache[coords] = result
    return result


def _residual_exact(polys: Sequence[TracePolynomial], pt: TracePoint) -> Fraction:
    x, y, z = (Fraction(v) for v in pt)
    total = Fraction(0)
    for p in polys:
        total += Fraction(p.eval_exact(x, y, z)) ** 2
    return total


def _mp_newton(polys: Sequence[TracePolynomial],
               j_polys: Sequence[TracePolynomial],
               start: np.ndarray,
               square: bool,
               iterations: int = 20) -> np.ndarray:
    """Damped Newton with symbolic Jacobian in high precision.

    The polynomials' exact integer coefficients make this stable where
    float64 monomial evaluation is not.  square=True solves F = 0 for a
    3-polynomial system; square=False treats polys=[gradient] of a scalar
    function whose Jacobian rows are the Hessian.
    """
    dim = 3
    with mpmath.workdps(_MP_DPS):
        pt = [mpmath.mpf(float(v)) for v in start]
        fv = mpmath.matrix([p.eval_mpf(*pt, mpmath.mp) for p in polys])
        best = mpmath.norm(fv)
        for _ in range(iterations):
            # rounding the result to float64 floors the achievable residual
            # near 1e-15 per component; polishing further is wasted work
            if best < mpmath.mpf("1e-25"):
                break
            jv = mpmath.matrix(dim, dim)
            for i, jp in enumerate(j_polys):
                jv[i // dim, i % dim] = jp.eval_mpf(*pt, mpmath.mp)
            try:
                delta = mpmath.lu_solve(jv, -fv)
            except (ZeroDivisionError, ValueError):
                break
            t = mpmath.mpf(1)
            improved = False
            for _ in range(30):
                trial = [pt[i] + t * delta[i] for i in range(dim)]
                tv = mpmath.matrix([p.eval_mpf(*trial, mpmath.mp) for p in polys])
                tn = mpmath.norm(tv)
                if tn < best:
                    pt, fv, best = trial, tv, tn
                    improved = True
                    break
                t /= 2
            if not improved:
                break
        return np.array([float(v) for v in pt])


# -- public search --------------------------------------------------------------


def find_witness(
    system: CommutatorSystem,
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_TOL,
    jobs: int = 1,
) -> TracePoint | None:
    """A common zero of the system in T, exact-rational when snapping works.

    Grid sweep at the given step, refinement of the best candidates,
    rational snapping (denominators up to 12) with exact re-checking, then
    a high-precision polish for irrational witnesses.  A float witness is
    accepted only if its exactly evaluated residual is below tol^2.
    """
    if not 0 < step <= 0.5:
        raise ValueError(f"step must be in (0, 0.5], got {step}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    polys = system.polynomials()
    objective = _Objective(system.words(), polys, minimize_value=False)
    refined = _search(objective, step, tol, jobs)
    exact_hits = []
    snap_cache: dict = {}
    for r, p in refined:
        if r > _SNAP_RESIDUAL:
            break
        pt = _snap_candidate(polys, p, SNAP_DENOMINATOR, snap_cache)
        if pt is not None:
            exact_hits.append(pt)
    if exact_hits:
        return max(exact_hits, key=lambda pt: pt.as_floats())

    j_polys = [p.derivative(v) for p in polys for v in range(3)]
    tol_sq = Fraction(tol) ** 2
    for r, p in refined[:_POLISH_COUNT]:
        if r > _POLISH_RESIDUAL:
            break
        polished = _mp_newton(list(polys), j_polys, p, square=True)
        pt = TracePoint(*(float(v) for v in polished))
        if not in_region(pt, max(tol, 1e-9)):
            continue
        if _residual_exact(polys, pt) < tol_sq:
            return pt
    return None


def _search(objective: _Objective, step: float, tol: float, jobs: int):
    candidates = _scan(objective, step, jobs, CANDIDATE_COUNT)
    if not candidates:
        return []
    dilation = max(tol, 1e-9)
    starts = np.array([[x, y, z] for _, x, y, z in candidates])
    pts, scores = _pattern_refine_batch(objective, starts, step, dilation)
    refined = [(float(scores[i]), pts[i]) for i in range(len(pts))]
    refined.sort(key=lambda t: (t[0], -t[1][0], -t[1][1], -t[1][2]))
    return refined


def attains_minus_two(
    w: Word,
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_TOL,
    engine: TraceEngine | None = None,
    jobs: int = 1,
) -> TracePoint | None:
    """A point of T where the trace polynomial of w reaches -2, if any.

    Minimizes the trace map over the dilated region (grid sweep plus local
    descent and a Newton polish on the gradient), then cross-validates the
    winner by realizing matrices and evaluating the word directly.
    """
    if not 0 < step <= 0.5:
        raise ValueError(f"step must be in (0, 0.5], got {step}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    engine = engine or TraceEngine()
    f_w = engine.trace_poly(w)
    shifted = f_w + 2
    objective = _Objective([w], [f_w], minimize_value=True)
    refined = _search(objective, step, tol, jobs)

    winner: TracePoint | None = None
    exact_hits = []
    snap_cache: dict = {}
    for r, p in refined:
        if r > _SNAP_RESIDUAL:
            break
        pt = _snap_candidate([shifted], p, SNAP_DENOMINATOR, snap_cache)
        if pt is not None:
            exact_hits.append(pt)
    if exact_hits:
        winner = max(exact_hits, key=lambda pt: pt.as_floats())
    else:
        grad = [f_w.derivative(v) for v in range(3)]
        hess = [g.derivative(v) for g in grad for v in range(3)]
        tol_frac = Fraction(tol)
        for r, p in refined[:_POLISH_COUNT]:
            if r > _POLISH_RESIDUAL:
                break
            polished = _mp_newton(grad, hess, p, square=False)
            pt = TracePoint(*(float(v) for v in polished))
            if not in_region(pt, max(tol, 1e-9)):
                continue
            exact_val = shifted.eval_exact(*(Fraction(v) for v in pt))
            if abs(exact_val) < tol_frac:
                winner = pt
                break
    if winner is None:
        return None
    a, b = realize_point(winner)
    achieved = evaluate_word(w, a, b).trace()
    if abs(achieved + 2.0) >= 10 * tol:
        return None
    return winner


# -- family checks ----------------------------------------------------------------


def family_words(m: int, n: int) -> tuple[Word, Word, Word]:
    """(u, v, w) = ([a, b], [a^m, b^n], [[a, b], [a^m, b^n]])."""
    u = commutator(GEN_A, GEN_B)
    v = commutator(power(GEN_A, m), power(GEN_B, n))
    return u, v, commutator(u, v)


def check_family(
    m: int,
    n_values: Iterable[int],
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_TOL,
    engine: TraceEngine | None = None,
    jobs: int = 1,
) -> list[SurjectivityCertificate]:
    """Certificates for w = [[a, b], [a^m, b^n]] across n.

    Runs both decision paths (the commutator system and the trace-attains
    route) and insists the verdicts agree before reporting.
    """
    engine = engine or TraceEngine()
    params = SearchParams(step=step, tol=tol, jobs=jobs)
    out = []
    for n in n_values:
        u, v, w = family_words(m, n)
        system = build_system(u, v, engine)
        witness = find_witness(system, step=step, tol=tol, jobs=jobs)
        attained = attains_minus_two(w, step=step, tol=tol, engine=engine, jobs=jobs)
        if (witness is None) != (attained is None):
            raise PathDisagreementError(
                f"m={m} n={n}: system search found {witness}, "
                f"trace-minimum search found {attained}"
            )
        if witness is None:
            cert = SurjectivityCertificate(
                word=w,
                verdict=VERDICT_NO_WITNESS,
                witness=None,
                residual=math.inf,
                method=METHOD_GRID_NEWTON,
                params=params,
                m=m,
                n=n,
            )
        else:
            residual = float(_residual_exact(system.polynomials(), witness))
            cert = SurjectivityCertificate(
                word=w,
                verdict=VERDICT_CERTIFIED if witness.exact else VERDICT_NUMERIC,
                witness=witness,
                residual=residual,
                method=METHOD_RATIONAL if witness.exact else METHOD_GRID_NEWTON,
                params=params,
                m=m,
                n=n,
            )
        out.append(cert)
    return out


# -- the x = 0 case analysis -------------------------------------------------------


@dataclass(frozen=True)
class CaseAnalysisX0:
    """Verdicts for the four x = 0 cases of the reduced system.

    case1: U_{n-1}(y/2) and U_{n-2}(y/2) share a root (never happens;
           consecutive Chebyshev polynomials are coprime).
    case2: y = 0 forces both to vanish (never; follows from case 1).
    case3: y = -1 solves the reduced equations with U_{n-1} nonzero.
    case4: y = +1 solves them with U_{n-1} nonzero; holds iff n = 2 mod 3,
           and then extends to the witness (0, 1, 1).
    """

    n: int
    case1: bool
    case2: bool
    case3: bool
    case4: bool
    resultant: int
    witness: TracePoint | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "case1": self.case1,
            "case2": self.case2,
            "case3": self.case3,
            "case4": self.case4,
            "resultant": self.resultant,
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


def case_analysis_x0(n: int) -> CaseAnalysisX0:
    """Reproduce the x = 0 specialization of the reduced system for m = 3.

    At x = 0 the two surviving equations in y are
    V^2 - y U V = 0 and U^2 - y U V = 0 with U = U_{n-1}(y/2),
    V = U_{n-2}(y/2).
    """
    if n < 1:
        raise ValueError("n must be positive")
    cu = u_half(n - 1)
    cv = u_half(n - 2)
    if not cu or not cv:
        # n = 1: U_{-1} = 0 identically; the pair still has no common root
        resultant = 1
        case1 = False
    else:
        res = univariate_resultant(cu, cv)
        assert res.denominator == 1
        resultant = int(res)
        case1 = resultant == 0
    case2 = eval_univariate(cu, 0) == 0 and eval_univariate(cv, 0) == 0

    def solves_at(y: int) -> bool:
        u_val = eval_univariate(cu, y)
        v_val = eval_univariate(cv, y)
        if u_val == 0:
            return False
        eq_a = v_val * v_val - y * u_val * v_val
        eq_b = u_val * u_val - y * u_val * v_val
        return eq_a == 0 and eq_b == 0

    case3 = solves_at(-1)
    case4 = solves_at(1)

    witness = None
    if case4:
        # kappa(0, 1, z) = z^2 - 1, so z = +-1; prefer the larger root
        from .chebyshev import closed_form

        sys16 = closed_form("sys16", n)
        sys17 = closed_form("sys17", n)
        for z in (1, -1):
            if (
                sys16.eval_exact(0, 1, z) == 0
                and sys17.eval_exact(0, 1, z) == 0
                and kappa_of(0, 1, z) == 0
            ):
                witness = TracePoint(0, 1, z)
                break
    return CaseAnalysisX0(
        n=n,
        case1=case1,
        case2=case2,
        case3=case3,
        case4=case4,
        resultant=resultant,
        witness=witness,
    )
