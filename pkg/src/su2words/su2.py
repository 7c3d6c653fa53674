"""SU(2) arithmetic with unit quaternions; the numeric ground truth.

A quaternion q0 + q1 i + q2 j + q3 k of unit norm stands for the matrix
[[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]]; the trace is 2 q0 and
the inverse is the conjugate.  Evaluating words on concrete pairs gives an
independent oracle for every symbolic identity in the package.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .region import TracePoint, in_region

_RENORM_EVERY = 64


class InfeasiblePointError(ValueError):
    """Point violates the region constraint beyond tolerance."""


@dataclass(frozen=True)
class SU2Element:
    q0: float
    q1: float
    q2: float
    q3: float

    def trace(self) -> float:
        return 2.0 * self.q0

    def norm(self) -> float:
        return math.sqrt(self.q0**2 + self.q1**2 + self.q2**2 + self.q3**2)

    def renormalized(self) -> "SU2Element":
        n = self.norm()
        return SU2Element(self.q0 / n, self.q1 / n, self.q2 / n, self.q3 / n)

    def inverse(self) -> "SU2Element":
        return SU2Element(self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, o: "SU2Element") -> "SU2Element":
        a0, a1, a2, a3 = self.q0, self.q1, self.q2, self.q3
        b0, b1, b2, b3 = o.q0, o.q1, o.q2, o.q3
        return SU2Element(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.q0 + 1j * self.q1, self.q2 + 1j * self.q3],
                [-self.q2 + 1j * self.q3, self.q0 - 1j * self.q1],
            ]
        )


IDENTITY = SU2Element(1.0, 0.0, 0.0, 0.0)


def identity() -> SU2Element:
    return IDENTITY


def random_element(rng: random.Random) -> SU2Element:
    """Haar-uniform element: four standard normals, normalized."""
    while True:
        q = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        n = math.sqrt(sum(v * v for v in q))
        if n > 1e-6:
            return SU2Element(*(v / n for v in q))


def evaluate_word(w, a: SU2Element, b: SU2Element) -> SU2Element:
    """Left-to-right product of the letters' images.

    Renormalizes every 64 letters and once at the end, which bounds drift
    for the long family words without per-step cost.
    """
    images = (a, a.inverse(), b, b.inverse())
    out = IDENTITY
    for i, letter in enumerate(w.letters):
        out = out * images[letter]
        if i % _RENORM_EVERY == _RENORM_EVERY - 1:
            out = out.renormalized()
    return out.renormalized()


# -- vectorized oracle helpers ------------------------------------------------


def random_pairs(rng: random.Random, count: int) -> tuple[np.ndarray, np.ndarray]:
    """(count, 4) arrays of Haar-random quaternion components."""
    flat = np.array([rng.gauss(0, 1) for _ in range(8 * count)])
    q = flat.reshape(2, count, 4)
    q /= np.linalg.norm(q, axis=2, keepdims=True)
    return q[0], q[1]

def quat_mul_batch(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    out = np.empty_like(p)
    a0, a1, a2, a3 = p[:, 0], p[:, 1], p[:, 2], p[:, 3]
    b0, b1, b2, b3 = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    out[:, 0] = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
    out[:, 1] = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
    out[:, 2] = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1
    out[:, 3] = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0
    return out


def word_traces(w, a_arr: np.ndarray, b_arr: np.ndarray) -> np.ndarray:
    """tr w(A_i, B_i) for batched quaternion pairs."""
    conj = np.array([1.0, -1.0, -1.0, -1.0])
    images = (a_arr, a_arr * conj, b_arr, b_arr * conj)
    out = np.zeros_like(a_arr)
    out[:, 0] = 1.0
    for i, letter in enumerate(w.letters):
        out = quat_mul_batch(out, images[letter])
        if i % _RENORM_EVERY == _RENORM_EVERY - 1:
            out /= np.linalg.norm(out, axis=1, keepdims=True)
    out /= np.linalg.norm(out, axis=1, keepdims=True)
    return 2.0 * out[:, 0]


# -- realizing trace coordinates ----------------------------------------------


def realize_point(p: TracePoint, tol: float = 1e-9) -> tuple[SU2Element, SU2Element]:
    """A pair (A, B) whose trace coordinates match p within tol.

    A rotates about the first axis with x = 2 cos(alpha); B has y = 2 cos(beta)
    about an axis tilted by phi, and phi is solved by bisection, which is
    certain because tr(AB) is continuous and monotone in phi on [0, pi].
    """
    if not in_region(TracePoint(*p.as_floats()), tol):
        raise InfeasiblePointError(f"{p} is not in the region within {tol}")
    x, y, z = p.as_floats()
    alpha = math.acos(_clamp(x / 2.0, 1.0))
    beta = math.acos(_clamp(y / 2.0, 1.0))
    a = SU2Element(math.cos(alpha), math.sin(alpha), 0.0, 0.0)
    sa, sb = math.sin(alpha), math.sin(beta)

    def trace_ab(phi: float) -> float:
        return 2.0 * (math.cos(alpha) * math.cos(beta) - sa * sb * math.cos(phi))

    if sa * sb < 1e-14:
        b = SU2Element(math.cos(beta), math.sin(beta), 0.0, 0.0)
        if abs(trace_ab(0.0) - z) > max(10 * tol, 1e-7):
            raise InfeasiblePointError(f"{p}: z is inconsistent with x = +-2 or y = +-2")
        return a, b
    lo, hi = 0.0, math.pi
    if z <= trace_ab(lo):
        phi = lo
    elif z >= trace_ab(hi):
        phi = hi
    else:
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if trace_ab(mid) < z:
                lo = mid
            else:
                hi = mid
            if hi - lo < 1e-12:
                break
        phi = 0.5 * (lo + hi)
    b = SU2Element(
        math.cos(beta), sb * math.cos(phi), sb * math.sin(phi), 0.0
    )
    return a, b


def _clamp(v: float, bound: float) -> float:
    return -bound if v < -bound else (bound if v > bound else v)
