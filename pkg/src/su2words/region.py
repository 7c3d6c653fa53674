"""Trace coordinates of SU(2) pairs up to simultaneous conjugation.

The image of (A, B) -> (tr A, tr B, tr AB) is the compact region
T = {(x, y, z) in [-2, 2]^3 : |kappa(x, y, z)| <= 2}.  Points carry either
exact rational or float coordinates; membership takes an explicit
tolerance so grid sweeps can dilate the region while certification stays
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .polynomials import kappa_of

Coordinate = int | Fraction | float


@dataclass(frozen=True)
class TracePoint:
    x: Coordinate
    y: Coordinate
    z: Coordinate

    @property
    def exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in (self.x, self.y, self.z))

    def kappa(self) -> Coordinate:
        """x^2 + y^2 + z^2 - xyz - 2 in the coordinates' own arithmetic."""
        return kappa_of(self.x, self.y, self.z)

    def as_floats(self) -> tuple[float, float, float]:
        return float(self.x), float(self.y), float(self.z)

    def to_json_dict(self) -> dict:
        def enc(v):
            return str(v) if isinstance(v, (int, Fraction)) else v

        return {"x": enc(self.x), "y": enc(self.y), "z": enc(self.z),
                "exact": self.exact}

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def in_region(p: TracePoint, tol: float = 0.0) -> bool:
    """Membership in T dilated by tol; exact when tol = 0 on exact points."""
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    bound = 2 + (Fraction(tol) if p.exact and tol else tol)
    if any(abs(v) > bound for v in p):
        return False
    return abs(p.kappa()) <= bound


def grid_axis(step: float) -> np.ndarray:
    """Lattice values -2, -2 + step, ... capped at 2."""
    if not 0 < step <= 2:
        raise ValueError(f"grid step must be in (0, 2], got {step}")
    count = int(np.floor(4.0 / step + 1e-9)) + 1
    return -2.0 + step * np.arange(count)


def grid(step: float) -> Iterator[TracePoint]:
    """Stream the step-lattice of [-2, 2]^3 filtered by in_region at tol=step.

    The dilation guarantees no component of {kappa = 0} inside T slips
    between lattice points.
    """
    axis = grid_axis(step)
    bound = 2.0 + step
    for x in axis:
        for y in axis:
            xy = x * x + y * y
            for z in axis:
                k = xy + z * z - x * y * z - 2.0
                if abs(k) <= bound:
                    yield TracePoint(float(x), float(y), float(z))


def point_from_pair(a, b) -> TracePoint:
    """(tr A, tr B, tr AB) for SU(2) elements; always lands in T."""
    return TracePoint(a.trace(), b.trace(), (a * b).trace())
