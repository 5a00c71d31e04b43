import cmath
import math

import pytest

from kleinian_packing.geometry import (
    GeneralizedCircle,
    MobiusMap,
    apply_boundary,
    circle_geometry,
    circle_transform,
    compose,
)

def test_center_radius():
    c = GeneralizedCircle.from_center_radius(1 - 2j, 0.5)
    assert c.curvature == pytest.approx(2)
    assert c.signed_curvature == pytest.approx(2)
    assert c.center == pytest.approx(1 - 2j)
    assert c.radius == pytest.approx(0.5)
    assert abs(c.b) ** 2 - c.a * c.c == pytest.approx(1)
    assert c.contains_point(1 - 2j)
    assert not c.contains_point(0j)

def test_negative_curvature_is_outside():
    c = GeneralizedCircle.from_curvature_center(-1, 0j)
    assert c.curvature == 1
    assert c.signed_curvature == -1
    assert not c.contains_point(0j)
    assert c.contains_point(5 + 0j)
    assert c.reversed().contains_point(0j)

def test_line():
    line = GeneralizedCircle.from_line(2j, 1.5)
    assert line.is_line
    assert line.curvature == 0
    assert line.normal == pytest.approx(1j)
    assert line.offset == pytest.approx(1.5)
    assert line.contains_point(0j)
    assert not line.contains_point(2j)
    geom = circle_geometry(line)
    assert geom.kind == "line"
    assert math.isinf(geom.radius)

def test_not_a_circle():
    with pytest.raises(ValueError):
        GeneralizedCircle(1, 0, 1)
    with pytest.raises(ValueError):
        GeneralizedCircle.from_line(0, 1)

def test_through_points():
    c = GeneralizedCircle.through_points(1 + 0j, 1j, -1 + 0j)
    assert c.center == pytest.approx(0, abs=1e-12)
    assert c.radius == pytest.approx(1)

    line = GeneralizedCircle.through_points(0j, 1 + 1j, 2 + 2j)
    assert line.is_line
    assert line.evaluate(3 + 3j) == pytest.approx(0, abs=1e-12)

@pytest.mark.parametrize("g", [
    MobiusMap.translation(1 + 1j),
    MobiusMap.diagonal(0.7),
    MobiusMap.lower_unipotent(0.4 - 0.3j),
    MobiusMap.inversion(GeneralizedCircle.from_center_radius(3 + 0j, 1)),
    compose(MobiusMap.inversion(GeneralizedCircle.from_line(1 + 1j, 0.2)), MobiusMap.rotation(0.3)),
])
def test_transform_maps_points_on_circle(g):
    circle = GeneralizedCircle.from_center_radius(0.5 + 0.25j, 0.75)
    image = circle_transform(g, circle)
    for t in (0.0, 1.0, 2.5, 4.0):
        z = apply_boundary(g, circle.center + circle.radius * cmath.exp(1j * t))
        assert image.evaluate(z) == pytest.approx(0, abs=1e-9)

def test_transform_keeps_interior():
    circle = GeneralizedCircle.from_center_radius(0j, 1)
    g = MobiusMap.translation(5 + 0j)
    assert circle_transform(g, circle).contains_point(5 + 0.5j)

    # Inversion in a circle through the origin turns the unit disk inside out
    s = MobiusMap.inversion(GeneralizedCircle.from_center_radius(1 + 0j, 1))
    image = circle_transform(s, circle)
    assert image.contains_point(apply_boundary(s, 0.1 + 0.1j))

def test_normalized_circle_is_not_rescaled():
    # |b|^2 - ac is exactly 1, but only up to rounding in floating point
    c = (4321 ** 2 + 7777 ** 2 - 1) / 9999
    circle = GeneralizedCircle(9999, -4321 + 7777j, c)
    assert circle.a == 9999
    assert circle.b == -4321 + 7777j
    assert circle.c == c

def test_unnormalized_circle_is_rescaled():
    circle = GeneralizedCircle(2, 0j, -2)
    assert (circle.a, circle.b, circle.c) == (1, 0, -1)
    assert circle.radius == 1

def test_transform_keeps_small_circles_exact():
    tiny = GeneralizedCircle.from_center_radius(0.3 + 0.1j, 1e-9)
    image = circle_transform(MobiusMap.translation(1 + 0j), tiny)
    assert image.curvature == pytest.approx(1e9, rel=1e-12)
    assert image.center == pytest.approx(1.3 + 0.1j, abs=1e-12)
