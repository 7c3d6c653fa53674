"""Sparse polynomials in Z[x, y, z] with exact integer coefficients.

x, y, z stand for tr(A), tr(B), tr(AB).  Terms map exponent triples to
nonzero arbitrary-precision integers.  Instances are immutable by
convention: every operation returns a new polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

VAR_NAMES = ("x", "y", "z")

# degrees stay linear in word length; the cap only guards pathology
MAX_EXPONENT = 2**16


class TracePolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean: dict[tuple[int, int, int], int] = {}
        if terms:
            for e, c in terms.items():
                if c == 0:
                    continue
                if max(e) >= MAX_EXPONENT:
                    raise OverflowError(f"exponent triple {e} exceeds cap {MAX_EXPONENT}")
                clean[e] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TracePolynomial is immutable")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other) -> "TracePolynomial":
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "TracePolynomial":
        return _wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "TracePolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "TracePolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "TracePolynomial":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return _wrap({e: c * other for e, c in self.terms.items()})
        other = _coerce(other)
        out: dict[tuple[int, int, int], int] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        if out and max(max(e) for e in out) >= MAX_EXPONENT:
            raise OverflowError("product exceeds exponent cap")
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TracePolynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(other)
        return isinstance(other, TracePolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=0)

    def derivative(self, var: int) -> "TracePolynomial":
        out: dict[tuple[int, int, int], int] = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            d = list(e)
            d[var] -= 1
            out[tuple(d)] = c * e[var]
        return _wrap(out)

    # -- evaluation ----------------------------------------------------------

    def eval_exact(self, x, y, z):
        """Exact evaluation; exact for int/Fraction inputs.

        >>> kappa().eval_exact(0, 1, 1)
        0
        """
        total = 0
        xp = _power_table(x, self.degree(0))
        yp = _power_table(y, self.degree(1))
        zp = _power_table(z, self.degree(2))
        for (i, j, k), c in self.terms.items():
            total += c * xp[i] * yp[j] * zp[k]
        return total

    def eval_float(self, x: float, y: float, z: float) -> float:
        """Compensated Horner evaluation at a float point.

        Horner in z, then y, then x, with Neumaier-compensated accumulation
        at each level.
        """
        by_k: dict[int, dict[tuple[int, int], int]] = {}
        for (i, j, k), c in self.terms.items():
            by_k.setdefault(k, {})[(i, j)] = c
        acc = _Neumaier()
        val = 0.0
        for k in range(self.degree(2), -1, -1):
            val = val * z
            layer = by_k.get(k)
            if layer:
                val += _eval_xy(layer, x, y)
        acc.add(val)
        return acc.total()

    def eval_mpf(self, x, y, z, mp):
        """Evaluate with mpmath numbers (``mp`` is the mpmath module/context)."""
        xp = _power_table(mp.mpf(x), self.degree(0))
        yp = _power_table(mp.mpf(y), self.degree(1))
        zp = _power_table(mp.mpf(z), self.degree(2))
        total = mp.mpf(0)
        for (i, j, k), c in self.terms.items():
            total += c * xp[i] * yp[j] * zp[k]
        return total

    def eval_many(self, pts: np.ndarray) -> np.ndarray:
        """Float evaluation at an (N, 3) array of points."""
        if not self.terms:
            return np.zeros(len(pts))
        xp = _power_columns(pts[:, 0], self.degree(0))
        yp = _power_columns(pts[:, 1], self.degree(1))
        zp = _power_columns(pts[:, 2], self.degree(2))
        out = np.zeros(len(pts))
        for (i, j, k), c in self.terms.items():
            out += float(c) * xp[i] * yp[j] * zp[k]
        return out

    def eval_many_dd(self, pts: np.ndarray) -> np.ndarray:
        """Double-double evaluation at an (N, 3) array of points.

        The big integer coefficients of high-degree trace polynomials make
        plain float64 monomial evaluation lose up to ~13 digits near the
        corners of [-2, 2]^3; with error-free transformations the result is
        accurate to a few ulps regardless of that conditioning.
        """
        n = len(pts)
        hi = np.zeros(n)
        lo = np.zeros(n)
        tables = []
        for v in range(3):
            col = np.ascontiguousarray(pts[:, v])
            tab = [(np.ones(n), np.zeros(n))]
            for _ in range(self.degree(v)):
                tab.append(_dd_mul(*tab[-1], col, np.zeros(n)))
            tables.append(tab)
        for (i, j, k), c in self.terms.items():
            chi = float(c)
            clo = float(c - int(chi))
            th, tl = _dd_mul_scalar(*tables[0][i], chi, clo)
            th, tl = _dd_mul(th, tl, *tables[1][j])
            th, tl = _dd_mul(th, tl, *tables[2][k])
            hi, lo = _dd_add(hi, lo, th, tl)
        return hi + lo

    def eval_grid(self, xs: np.ndarray, ys: np.ndarray, zs: np.ndarray) -> np.ndarray:
        """Evaluate on the tensor grid xs x ys x zs; returns a 3-D array.

        Uses mode products with the dense coefficient tensor, so the cost is
        linear in grid size even for high-degree polynomials.
        """
        dx, dy, dz = (self.degree(v) + 1 for v in range(3))
        coeffs = np.zeros((dx, dy, dz))
        for (i, j, k), c in self.terms.items():
            coeffs[i, j, k] = float(c)
        vx = _power_columns_matrix(xs, dx)   # (nx, dx)
        vy = _power_columns_matrix(ys, dy)
        vz = _power_columns_matrix(zs, dz)
        t = np.tensordot(vx, coeffs, axes=(1, 0))      # (nx, dy, dz)
        t = np.tensordot(vy, t, axes=(1, 1))           # (ny, nx, dz)
        t = np.tensordot(vz, t, axes=(1, 2))           # (nz, ny, nx)
        return t.transpose(2, 1, 0)

    # -- serialization -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], int]]:
        """Terms in canonical order: (i, j, k) descending lexicographic."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def to_text(self) -> str:
        """Canonical text form, e.g. 'x^2 - x*y*z + y^2 + z^2 - 2'."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e, c in self.sorted_terms():
            mono = _monomial_text(e)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"e": list(e), "c": str(c)} for e, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TracePolynomial":
        return cls({tuple(t["e"]): int(t["c"]) for t in data["terms"]})

    def __repr__(self) -> str:
        return f"TracePolynomial({self.to_text()})"


def _wrap(terms: dict) -> TracePolynomial:
    p = TracePolynomial.__new__(TracePolynomial)
    object.__setattr__(p, "terms", terms)
    return p


def _coerce(v) -> TracePolynomial:
    if isinstance(v, TracePolynomial):
        return v
    if isinstance(v, int):
        return constant(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to TracePolynomial")


def _power_table(base, deg: int) -> list:
    powers = [base**0]
    for _ in range(deg):
        powers.append(powers[-1] * base)
    return powers


def _power_columns(col: np.ndarray, deg: int) -> list[np.ndarray]:
    out = [np.ones_like(col)]
    for _ in range(deg):
        out.append(out[-1] * col)
    return out


def _power_columns_matrix(col: np.ndarray, count: int) -> np.ndarray:
    out = np.empty((len(col), count))
    out[:, 0] = 1.0
    for i in range(1, count):
        out[:, i] = out[:, i - 1] * col
    return out


# -- double-double kernels (vectorized error-free transformations) ----------

_SPLITTER = 134217729.0  # 2^27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _dd_add(xh, xl, yh, yl):
    s, e = _two_sum(xh, yh)
    e = e + xl + yl
    return _quick_two_sum(s, e)


def _dd_mul(xh, xl, yh, yl):
    p, e = _two_prod(xh, yh)
    e = e + xh * yl + xl * yh
    return _quick_two_sum(p, e)


def _dd_mul_scalar(xh, xl, chi: float, clo: float):
    p, e = _two_prod(xh, chi)
    e = e + xh * clo + xl * chi
    return _quick_two_sum(p, e)


class _Neumaier:
    """Compensated accumulator (Neumaier variant of Kahan summation)."""

    __slots__ = ("s", "c")

    def __init__(self):
        self.s = 0.0
        self.c = 0.0

    def add(self, v: float):
        t = self.s + v
        if abs(self.s) >= abs(v):
            self.c += (self.s - t) + v
        else:
            self.c += (v - t) + self.s
        self.s = t

    def total(self) -> float:
        return self.s + self.c


def _eval_xy(layer: dict[tuple[int, int], int], x: float, y: float) -> float:
    by_j: dict[int, dict[int, int]] = {}
    for (i, j), c in layer.items():
        by_j.setdefault(j, {})[i] = c
    acc = _Neumaier()
    val = 0.0
    for j in range(max(by_j), -1, -1):
        val = val * y
        row = by_j.get(j)
        if row:
            inner = 0.0
            for i in range(max(row), -1, -1):
                inner = inner * x + row.get(i, 0)
            val += inner
    acc.add(val)
    return acc.total()


def _monomial_text(e: tuple[int, int, int]) -> str:
    pieces = []
    for name, exp in zip(VAR_NAMES, e):
        if exp == 1:
            pieces.append(name)
        elif exp > 1:
            pieces.append(f"{name}^{exp}")
    return "*".join(pieces)


def constant(c: int) -> TracePolynomial:
    return TracePolynomial({(0, 0, 0): c})


def monomial(i: int, j: int, k: int, c: int = 1) -> TracePolynomial:
    return TracePolynomial({(i, j, k): c})


ZERO = TracePolynomial()
ONE = constant(1)
TWO = constant(2)
X = monomial(1, 0, 0)
Y = monomial(0, 1, 0)
Z = monomial(0, 0, 1)


def kappa() -> TracePolynomial:
    """kappa = x^2 + y^2 + z^2 - x*y*z - 2, the commutator trace polynomial."""
    return TracePolynomial(
        {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (1, 1, 1): -1, (0, 0, 0): -2}
    )


KAPPA = kappa()


def divmod_kappa(p: TracePolynomial) -> tuple[TracePolynomial, TracePolynomial]:
    """Quotient and remainder of p by kappa viewed as monic degree-2 in z.

    kappa = z^2 - x*y*z + (x^2 + y^2 - 2), so z^2 rewrites to
    x*y*z - x^2 - y^2 + 2.  Satisfies p == q * kappa + r exactly with the
    z-degree of r at most 1.
    """
    rem = dict(p.terms)
    quo: dict[tuple[int, int, int], int] = {}
    while True:
        kmax = max((e[2] for e in rem), default=0)
        if kmax < 2:
            break
        top = [(e, c) for e, c in rem.items() if e[2] == kmax]
        for (i, j, k), c in top:
            qe = (i, j, k - 2)
            quo[qe] = quo.get(qe, 0) + c
            # rem -= c * x^i y^j z^(k-2) * kappa
            for de, dc in KAPPA.terms.items():
                e = (i + de[0], j + de[1], k - 2 + de[2])
                s = rem.get(e, 0) - c * dc
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
    return _wrap(quo), _wrap(rem)


def reduce_mod_kappa(p: TracePolynomial) -> TracePolynomial:
    """Canonical remainder of p modulo kappa (z-degree at most 1)."""
    return divmod_kappa(p)[1]


def kappa_of(x, y, z):
    """kappa evaluated with the native arithmetic of its arguments."""
    return x * x + y * y + z * z - x * y * z - 2


def snap_to_fraction(v: float, max_denominator: int) -> Fraction:
    return Fraction(v).limit_denominator(max_denominator)
