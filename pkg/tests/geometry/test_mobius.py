import cmath
import math

import pytest

from kleinian_packing.geometry import (
    INFINITY,
    GeneralizedCircle,
    MobiusMap,
    apply_boundary,
    compose,
    identity,
    inverse,
    is_infinity,
)

def test_compose_applies_right_first():
    t = MobiusMap.translation(1 + 2j)
    a = MobiusMap.diagonal(math.log(3))
    z = 0.5 - 0.25j
    assert apply_boundary(compose(t, a), z) == pytest.approx(3 * z + 1 + 2j)
    assert apply_boundary(compose(a, t), z) == pytest.approx(3 * (z + 1 + 2j))

def test_inverse_gives_identity():
    g = compose(MobiusMap.translation(0.3j), MobiusMap.lower_unipotent(1.5 - 0.2j))
    assert compose(g, inverse(g)).is_identity()
    assert compose(inverse(g), g).is_identity()

def test_inverse_of_reflection():
    g = compose(MobiusMap.inversion(GeneralizedCircle.from_center_radius(1j, 2)), MobiusMap.translation(0.5))
    assert g.reflection
    assert compose(g, inverse(g)).is_identity()

@pytest.mark.parametrize("circle", [
    GeneralizedCircle.unit_circle(),
    GeneralizedCircle.from_center_radius(2 - 1j, 0.25),
    GeneralizedCircle.from_line(1j, 0.5),
])
def test_inversion_is_involution_fixing_circle(circle):
    s = MobiusMap.inversion(circle)
    assert s.is_involution()
    if circle.is_line:
        points = [circle.normal * circle.offset + 1j * circle.normal * t for t in (-1, 0, 2)]
    else:
        points = [circle.center + circle.radius * cmath.exp(1j * t) for t in (0.1, 1.7, 4)]
    for z in points:
        assert apply_boundary(s, z) == pytest.approx(z, abs=1e-12)

def test_unit_inversion():
    s = MobiusMap.inversion(GeneralizedCircle.unit_circle())
    assert apply_boundary(s, 2 + 0j) == pytest.approx(0.5)
    assert apply_boundary(s, 2j) == pytest.approx(0.5j)

def test_scaling():
    g = MobiusMap.scaling(2.5, 1 - 1j)
    assert apply_boundary(g, 1j) == pytest.approx(2.5j + 1 - 1j)
    with pytest.raises(ValueError):
        MobiusMap.scaling(0)

def test_infinity():
    assert is_infinity(apply_boundary(MobiusMap.translation(3), INFINITY))
    n = MobiusMap.lower_unipotent(2)
    assert apply_boundary(n, INFINITY) == pytest.approx(0.5)
    assert is_infinity(apply_boundary(n, -0.5))
    assert apply_boundary(identity(), 1 + 1j) == 1 + 1j

def test_rotation():
    g = MobiusMap.rotation(math.pi / 4)
    assert apply_boundary(g, 1 + 0j) == pytest.approx(1j)

def test_canonical_key_ignores_sign():
    g = MobiusMap.translation(0.5)
    h = MobiusMap(-1, -0.5, 0, -1)
    assert g.canonical_key() == h.canonical_key()
    assert g.isclose(h)
