"""Chebyshev polynomials of the second kind and closed-form trace polynomials.

U_n satisfies U_0 = 1, U_1 = 2x, U_{n+1} = 2x U_n - U_{n-1}.  The half-
argument polynomials V_n(t) = U_n(t/2) have integer coefficients and obey
V_{n+1} = t V_n - V_{n-1}; they carry the closed forms for the word
families [a, b^n], [a^m, b^n] and their products with [a, b].  Everything
here is exact integer arithmetic, independent of the rewriting engine, so
the two construction routes cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polynomials import (
    TracePolynomial,
    ZERO,
    ONE,
    TWO,
    X,
    Y,
    Z,
    kappa,
)

MAX_CHEBYSHEV_N = 10**5

CLOSED_FORM_IDS = (
    "f_ab_bn",
    "f_a3_bn",
    "f_abab_bn",
    "tr_conj_term",
    "f_ab_a2bn",
    "sys16",
    "sys17",
)


@dataclass(frozen=True)
class ChebyshevU:
    """U_n with exact coefficients, coeffs[i] the coefficient of x^i."""

    n: int
    coeffs: tuple[int, ...]

    def __call__(self, t):
        return eval_univariate(self.coeffs, t)


def eval_univariate(coeffs: tuple[int, ...], t):
    """Horner evaluation; exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@lru_cache(maxsize=None)
def chebyshev_u(n: int) -> ChebyshevU:
    """Chebyshev polynomial of the second kind, exact coefficients.

    >>> chebyshev_u(2).coeffs
    (-1, 0, 4)
    """
    if n < 0 or n > MAX_CHEBYSHEV_N:
        raise ValueError(f"n must be in 0..{MAX_CHEBYSHEV_N}, got {n}")
    if n == 0:
        return ChebyshevU(0, (1,))
    if n == 1:
        return ChebyshevU(1, (0, 2))
    prev2, prev1 = chebyshev_u(n - 2).coeffs, chebyshev_u(n - 1).coeffs
    # 2x * prev1 - prev2
    out = [0] * (n + 1)
    for i, c in enumerate(prev1):
        out[i + 1] += 2 * c
    for i, c in enumerate(prev2):
        out[i] -= c
    return ChebyshevU(n, tuple(out))


@lru_cache(maxsize=None)
def u_half(n: int) -> tuple[int, ...]:
    """Coefficients of V_n(t) = U_n(t/2); V_{-1} = 0, V_0 = 1, V_1 = t."""
    if n < -1:
        raise ValueError("u_half defined for n >= -1")
    if n == -1:
        return ()
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    prev2, prev1 = u_half(n - 2), u_half(n - 1)
    out = [0] * (n + 1)
    for i, c in enumerate(prev1):
        out[i + 1] += c
    for i, c in enumerate(prev2):
        out[i] -= c
    return tuple(out)


def matrix_power_expand(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Coefficient pair (c_A, c_I) with A^n = c_A(x) A - c_I(x) I, x = tr A.

    Integer coefficients by construction of the half-argument recurrence.
    """
    if n < 2:
        raise ValueError(f"matrix_power_expand requires n >= 2, got {n}")
    return u_half(n - 1), u_half(n - 2)


def embed_univariate(coeffs: tuple[int, ...], var: int) -> TracePolynomial:
    """Lift a univariate integer polynomial into Z[x, y, z] at variable var."""
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0, 0, 0]
            e[var] = i
            terms[tuple(e)] = c
    return TracePolynomial(terms)


def _uv_in_y(n: int) -> tuple[TracePolynomial, TracePolynomial]:
    """U_{n-1}(y/2) and U_{n-2}(y/2) as trace polynomials."""
    return embed_univariate(u_half(n - 1), 1), embed_univariate(u_half(n - 2), 1)


# -- closed-form assemblers -------------------------------------------------
# Each takes the kappa building block as a parameter so the reduced system
# valid on {kappa = 0} reuses the same assembly with kappa replaced by 0.


def _form_ab_bn(u: TracePolynomial, v: TracePolynomial, kap: TracePolynomial):
    return u * u * kap - 2 * (u * v * Y) + 2 * (v * v)


def _form_a3_bn(u, v, kap):
    lead = X**4 - 2 * X**2 + ONE
    return lead * _form_ab_bn(u, v, kap) - 2 * X**4 + 4 * X**2


def _form_abab_bn(u, v, kap):
    return (
        u * u * (kap * kap - TWO)
        - 2 * (u * v) * (Y * kap - Y)
        + v * v * kap
    )


def _form_tr_conj(u, v, kap):
    return (
        u * u * (X * kap - X)
        - (u * v) * (X * Y - Z)
        + v * v * X
        - (u * v) * (Z * kap - Z)
    )


def _form_ab_a2bn(u, v, kap):
    return (
        X**2 * _form_abab_bn(u, v, kap)
        - X * (X * kap - X)
        + kap
        - X * _form_tr_conj(u, v, kap)
    )


def _form_ab_a3bn(u, v, kap):
    # from A^3 = (x^2 - 1) A - x I applied inside [a,b][a^3,b^n]
    lead = X**2 - ONE
    return (
        lead * lead * _form_abab_bn(u, v, kap)
        - X * lead * (X * kap - X)
        - X * lead * _form_tr_conj(u, v, kap)
        + X**2 * kap
    )


def closed_form(form_id: str, n: int) -> TracePolynomial:
    """Closed-form trace polynomial for a word family at parameter n.

    f_ab_bn       f_{[a, b^n]}
    f_a3_bn       f_{[a^3, b^n]}
    f_abab_bn     f_{[a, b][a, b^n]}
    tr_conj_term  tr([A, B] B^n A^-1 B^-n)
    f_ab_a2bn     f_{[a, b][a^2, b^n]}
    sys16         f_{[a^3, b^n]} with kappa set to 0 (valid on the locus
                  kappa = 0; twice the halved form printed in the source
                  derivation, same zero set)
    sys17         f_{[a, b][a^3, b^n]} with kappa set to 0

    n = 1 uses U_{-1} = 0, U_0 = 1, consistent with [a, b^1] = [a, b].
    """
    if n < 1:
        raise ValueError(f"family parameter n must be positive, got {n}")
    u, v = _uv_in_y(n)
    kap = kappa()
    if form_id == "f_ab_bn":
        return _form_ab_bn(u, v, kap)
    if form_id == "f_a3_bn":
        return _form_a3_bn(u, v, kap)
    if form_id == "f_abab_bn":
        return _form_abab_bn(u, v, kap)
    if form_id == "tr_conj_term":
        return _form_tr_conj(u, v, kap)
    if form_id == "f_ab_a2bn":
        return _form_ab_a2bn(u, v, kap)
    if form_id == "sys16":
        return _form_a3_bn(u, v, ZERO)
    if form_id == "sys17":
        return _form_ab_a3bn(u, v, ZERO)
    raise ValueError(f"unknown closed form id {form_id!r}")


# -- univariate resultant ---------------------------------------------------


def univariate_resultant(p: tuple[int, ...], q: tuple[int, ...]) -> Fraction:
    """Resultant of two nonzero univariate integer polynomials.

    Euclidean algorithm over Q; zero iff the polynomials share a root.
    """
    p = _trim(tuple(Fraction(c) for c in p))
    q = _trim(tuple(Fraction(c) for c in q))
    if not p or not q:
        raise ValueError("resultant of the zero polynomial is not defined here")
    return _resultant(p, q)


def _trim(c: tuple) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _resultant(f: tuple, g: tuple) -> Fraction:
    df, dg = len(f) - 1, len(g) - 1
    if df == 0 and dg == 0:
        return Fraction(1)
    if df < dg:
        sign = -1 if (df * dg) % 2 else 1
        return sign * _resultant(g, f)
    if dg == 0:
        return g[0] ** df
    r = _polymod(f, g)
    if not r:
        return Fraction(0)
    dr = len(r) - 1
    sign = -1 if (df * dg) % 2 else 1
    return sign * g[-1] ** (df - dr) * _resultant(g, r)


def _polymod(f: tuple, g: tuple) -> tuple:
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        factor = r[-1] / lg
        shift = len(r) - 1 - dg
        for i, c in enumerate(g):
            r[shift + i] -= factor * c
        r.pop()
    return _trim(tuple(r))
