import random
from fractions import Fraction

import pytest

from su2words.region import TracePoint, grid, grid_axis, in_region, point_from_pair
from su2words.su2 import SU2Element, random_element


def test_membership_examples():
    assert in_region(TracePoint(2, 2, 2), 0.0)
    assert in_region(TracePoint(0, 1, 1), 0.0)
    assert not in_region(TracePoint(2, 2, -2), 0.0)


def test_membership_needs_box():
    # kappa(3, 3, 3) = 'in range' is irrelevant; the box fails first
    assert not in_region(TracePoint(3, 0, 0), 0.0)


def test_membership_exact_rational():
    p = TracePoint(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    assert p.exact
    assert p.kappa() == Fraction(3, 4) - Fraction(1, 8) - 2
    assert in_region(p, 0.0)


def test_membership_rejects_negative_tol():
    with pytest.raises(ValueError):
        in_region(TracePoint(0, 0, 0), -1.0)


def test_grid_step_two_contains_origin():
    pts = {tuple(p) for p in grid(2.0)}
    assert (0.0, 0.0, 0.0) in pts


def test_grid_step_one_contains_witness_excludes_far_corner():
    pts = {tuple(p) for p in grid(1.0)}
    assert (0.0, 1.0, 1.0) in pts
    assert (2.0, 2.0, -2.0) not in pts


def test_grid_matches_in_region_with_step_tolerance():
    step = 0.5
    for p in grid(step):
        assert in_region(p, step)


def test_grid_axis_bounds():
    axis = grid_axis(0.05)
    assert len(axis) == 81
    assert axis[0] == -2.0
    assert abs(axis[-1] - 2.0) < 1e-9
    with pytest.raises(ValueError):
        grid_axis(0.0)


def test_point_from_pair_identity():
    eye = SU2Element(1.0, 0.0, 0.0, 0.0)
    assert tuple(point_from_pair(eye, eye)) == (2.0, 2.0, 2.0)


def test_point_from_pair_quaternion_i():
    qi = SU2Element(0.0, 1.0, 0.0, 0.0)
    pt = point_from_pair(qi, qi)
    assert tuple(pt) == (0.0, 0.0, -2.0)


def test_random_pairs_land_in_region(rng):
    kap = []
    for _ in range(100_000):
        a, b = random_element(rng), random_element(rng)
        p = point_from_pair(a, b)
        assert in_region(p, 1e-9)
        kap.append(p.kappa())
    assert min(kap) >= -2 - 1e-9 and max(kap) <= 2 + 1e-9


def test_kappa_equals_commutator_trace(rng):
    for _ in range(2000):
        a, b = random_element(rng), random_element(rng)
        p = point_from_pair(a, b)
        comm = a * b * a.inverse() * b.inverse()
        assert abs(p.kappa() - comm.trace()) < 1e-9


def test_json_encoding():
    exact = TracePoint(0, Fraction(1, 2), 1)
    data = exact.to_json_dict()
    assert data == {"x": "0", "y": "1/2", "z": "1", "exact": True}
    rough = TracePoint(0.5, 0.25, -1.0)
    assert rough.to_json_dict()["exact"] is False
