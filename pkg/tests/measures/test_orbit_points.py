import math

import numpy as np
import pytest

from kleinian_packing.errors import InsufficientData
from kleinian_packing.geometry import J, MobiusMap, UHPoint
from kleinian_packing.counting import CountSeries
from kleinian_packing.measures import (
    OrbitPointSet,
    critical_exponent_circles,
    critical_exponent_orbit,
    orbit_points,
    poincare_sum,
)
from kleinian_packing.packing import GroupPresentation

@pytest.fixture(scope="module")
def cyclic():
    return GroupPresentation((MobiusMap.diagonal(1.0),))

def test_depth_zero(dual_group):
    orbit = orbit_points(dual_group, 0)
    assert len(orbit) == 1
    point, word_len, dist = next(iter(orbit))
    assert point == J
    assert word_len == 0
    assert dist == 0

def test_cyclic_orbit(cyclic):
    orbit = orbit_points(cyclic, 5)
    assert len(orbit) == 11
    assert sorted(orbit.r) == pytest.approx([math.exp(k) for k in range(-5, 6)])
    assert np.allclose(orbit.z, 0)
    assert sorted(orbit.dist) == pytest.approx(sorted(abs(k) for k in range(-5, 6)), abs=1e-12)
    assert orbit.max_word_len == 5

def test_dual_group_points_are_distinct(dual_group):
    orbit = orbit_points(dual_group, 4)
    # At most 1 + 4 + 12 + 36 + 108 words; inversions fixing j merge points
    assert 1 < len(orbit) <= 161
    keys = {(round(z.real, 6), round(z.imag, 6), round(math.log(r), 6)) for z, r in zip(orbit.z, orbit.r)}
    assert len(keys) == len(orbit)
    assert orbit.word_len.tolist() == sorted(orbit.word_len.tolist())

def test_orbit_points_isometry(dual_group):
    orbit = orbit_points(dual_group, 3)
    for point, _, dist in orbit:
        assert point.r > 0
        assert dist >= 0

def test_negative_depth(cyclic):
    with pytest.raises(ValueError):
        orbit_points(cyclic, -1)

def test_poincare_sum(cyclic):
    orbit = orbit_points(cyclic, 5)
    expected = 1 + 2 * sum(math.exp(-0.5 * k) for k in range(1, 6))
    assert poincare_sum(orbit, 0.5) == pytest.approx(expected)
    moved = poincare_sum(orbit, 0.5, UHPoint(0j, math.e))
    expected = 1 + 2 * sum(math.exp(-0.5 * d) for d in range(1, 5)) + math.exp(-2.5) + math.exp(-3)
    assert moved == pytest.approx(expected)
    with pytest.raises(ValueError):
        poincare_sum(orbit, 0)

def test_poincare_sum_decreases_in_s(dual_group):
    orbit = orbit_points(dual_group, 5)
    values = [poincare_sum(orbit, s) for s in (0.5, 1.0, 1.5, 2.0)]
    assert all(a > b for a, b in zip(values, values[1:]))

def test_growth_rate_of_synthetic_orbit():
    k = np.arange(1, 20001)
    orbit = OrbitPointSet.from_distances(0.5 * np.log(k))
    estimate = critical_exponent_orbit(orbit)
    assert estimate.method == "orbit-growth"
    assert estimate.delta == pytest.approx(2, abs=0.05)

def test_cyclic_group_has_exponent_zero(cyclic):
    estimate = critical_exponent_orbit(orbit_points(cyclic, 50))
    assert estimate.delta == pytest.approx(0, abs=0.05)

def test_growth_rate_needs_data(cyclic):
    with pytest.raises(InsufficientData):
        critical_exponent_orbit(orbit_points(cyclic, 5))
    with pytest.raises(InsufficientData):
        critical_exponent_orbit(OrbitPointSet.from_distances(np.full(200, 1.0)))

def test_circle_count_estimate():
    T = tuple(10 * 2 ** (k / 2) for k in range(30))
    series = CountSeries(T, tuple(round(3 * t ** 1.3) for t in T))
    estimate = critical_exponent_circles(series)
    assert estimate.method == "circle-count"
    assert estimate.delta == pytest.approx(1.3, abs=0.02)
    assert estimate.to_dict()["window"] == list(estimate.window)

def test_from_points():
    orbit = OrbitPointSet.from_points([J, UHPoint(1 + 1j, 2.0)])
    assert len(orbit) == 2
    assert orbit.dist[0] == 0
    assert orbit.points()[1] == UHPoint(1 + 1j, 2.0)
    with pytest.raises(ValueError):
        OrbitPointSet([0j], [-1.0], [0])
