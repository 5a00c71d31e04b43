import pytest

from kleinian_packing.geometry import GeneralizedCircle
from kleinian_packing.packing import Packing, detect_bouquet, orbit_enumerate, schottky_build

def _packing(circles):
    n = len(circles)
    return Packing(circles, [0] * n, [-1] * n, 100.0)

def _family(point, direction, count):
    # Circles through ``point`` with radii 1/(2n), centers along ``direction``
    return [
        GeneralizedCircle.from_center_radius(point + direction / (2 * n), 1 / (2 * n))
        for n in range(1, count + 1)
    ]

def test_two_shrinking_families():
    circles = _family(0j, 1, 4) + _family(0j, -1, 4)
    result = detect_bouquet(_packing(circles), 0j)
    assert result
    assert result.witnesses == list(range(8))

def test_bouquet_along_other_axis():
    point = 1 + 1j
    circles = _family(point, 1j, 3) + _family(point, -1j, 3)
    circles.append(GeneralizedCircle.from_center_radius(5 + 0j, 1))
    result = detect_bouquet(_packing(circles), point)
    assert result.found
    assert 6 not in result.witnesses

def test_one_sided_family_is_not_a_bouquet():
    assert not detect_bouquet(_packing(_family(0j, 1, 6)), 0j)

def test_too_few_circles():
    circles = _family(0j, 1, 2) + _family(0j, -1, 2)
    assert not detect_bouquet(_packing(circles), 0j)

def test_radii_not_shrinking_enough():
    circles = [
        GeneralizedCircle.from_center_radius(r, r) for r in (1.0, 0.9, 0.8)
    ] + [
        GeneralizedCircle.from_center_radius(-r, r) for r in (1.0, 0.3, 0.2)
    ]
    assert not detect_bouquet(_packing(circles), 0j)

def test_gasket_tangency_is_not_a_bouquet(gasket_100):
    # The two curvature-2 circles touch at the origin
    assert not detect_bouquet(gasket_100, 0j)

def test_schottky_boundary_is_not_a_bouquet():
    presentation, seeds = schottky_build([((-2 + 0j, 0.5), (2 + 0j, 0.5))])
    packing = orbit_enumerate(presentation, seeds, 1e3, 6, prune=True)
    assert not detect_bouquet(packing, -1.5 + 0j)
    assert not detect_bouquet(packing, 1.5 + 0j)

def test_lines_are_ignored(strip_packing):
    assert not detect_bouquet(strip_packing, 1j)

@pytest.mark.parametrize("min_circles", [9, 20])
def test_min_circles(min_circles):
    circles = _family(0j, 1, 4) + _family(0j, -1, 4)
    assert not detect_bouquet(_packing(circles), 0j, min_circles=min_circles)
