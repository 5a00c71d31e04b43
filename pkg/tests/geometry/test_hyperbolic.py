import math

import pytest

from kleinian_packing.geometry import (
    INFINITY,
    GeneralizedCircle,
    J,
    MobiusMap,
    UHPoint,
    apply_boundary,
    apply_h3,
    busemann,
    compose,
    cosh_dist,
    hyp_dist,
    inverse,
    is_infinity,
)

def _random_letter(rng):
    kind = rng.integers(5)
    x, y = rng.uniform(-1, 1, size=2)
    if kind == 0:
        return MobiusMap.diagonal(x)
    if kind == 1:
        return MobiusMap.translation(complex(x, y))
    if kind == 2:
        return MobiusMap.lower_unipotent(complex(x, y))
    if kind == 3:
        return MobiusMap.rotation(math.pi * x)
    return MobiusMap.inversion(GeneralizedCircle.from_center_radius(complex(x, y), 1 + abs(y)))

def _random_point(rng):
    x, y = rng.uniform(-1, 1, size=2)
    return UHPoint(complex(x, y), rng.uniform(0.5, 2))

def test_isometry_invariance(rng):
    for _ in range(1000):
        g = MobiusMap.identity()
        for _ in range(rng.integers(1, 9)):
            g = compose(g, _random_letter(rng))
        x, y = _random_point(rng), _random_point(rng)
        d = hyp_dist(x, y)
        assert hyp_dist(apply_h3(g, x), apply_h3(g, y)) == pytest.approx(d, rel=1e-9, abs=1e-12)

def test_distance_basics():
    assert hyp_dist(J, J) == 0
    assert hyp_dist(J, UHPoint(0j, math.e)) == pytest.approx(1.0)
    x, y = UHPoint(1 + 1j, 0.5), UHPoint(-2j, 3.0)
    assert math.cosh(hyp_dist(x, y)) == pytest.approx(cosh_dist(x, y))

def test_diagonal_moves_j_up():
    for t in (-2.0, 0.0, 1.5):
        p = apply_h3(MobiusMap.diagonal(t), J)
        assert p.z == pytest.approx(0)
        assert p.r == pytest.approx(math.exp(t))

def test_reflection_acts_on_upper_half_space():
    s = MobiusMap.inversion(GeneralizedCircle.unit_circle())
    # The unit hemisphere is fixed pointwise
    assert hyp_dist(apply_h3(s, J), J) == pytest.approx(0, abs=1e-12)
    p = apply_h3(s, UHPoint(0j, 2.0))
    assert p.r == pytest.approx(0.5)

@pytest.mark.parametrize("zeta", [0.3 - 0.4j, 1 + 1j, -2 + 0j])
def test_busemann_matches_distance_difference(zeta):
    x, y = UHPoint(0.2 + 0.1j, 0.7), UHPoint(-0.5 + 1j, 1.8)
    g = MobiusMap(zeta, -1, 1, 0)
    xi = apply_h3(g, UHPoint(0j, math.exp(30)))
    expected = hyp_dist(x, xi) - hyp_dist(y, xi)
    assert busemann(zeta, x, y) == pytest.approx(expected, abs=1e-6)

def test_busemann_at_infinity():
    x, y = UHPoint(0j, 1.0), UHPoint(5 + 5j, 4.0)
    assert busemann(INFINITY, x, y) == pytest.approx(math.log(4))

def _random_word(rng, max_len):
    g = MobiusMap.identity()
    for _ in range(rng.integers(1, max_len + 1)):
        g = compose(g, _random_letter(rng))
    return g

def test_busemann_at_infinity_limit(rng):
    t = 30.0
    far = UHPoint(0j, math.exp(t))
    for _ in range(20):
        x = _random_point(rng)
        assert busemann(INFINITY, J, x) == pytest.approx(t - hyp_dist(x, far), abs=1e-6)

def test_busemann_equivariance(rng):
    for _ in range(200):
        g = _random_word(rng, 4)
        zeta = complex(*rng.uniform(-1, 1, size=2))
        x, y = _random_point(rng), _random_point(rng)
        moved = busemann(zeta, apply_h3(g, x), apply_h3(g, y))
        assert busemann(apply_boundary(inverse(g), zeta), x, y) == pytest.approx(moved, rel=1e-9, abs=1e-9)

def test_boundary_action_is_the_limit(rng):
    checked = 0
    for _ in range(200):
        g = _random_word(rng, 4)
        z = complex(*rng.uniform(-1, 1, size=2))
        w = apply_boundary(g, z)
        # Stay away from the pole
        if is_infinity(w) or abs(w) > 1e3:
            continue
        assert apply_h3(g, UHPoint(z, 1e-6)).z == pytest.approx(w, abs=1e-4)
        checked += 1
    assert checked > 100

def test_busemann_cocycle():
    zeta = 0.25 + 0.5j
    x, y, w = UHPoint(0j, 1.0), UHPoint(1j, 2.0), UHPoint(-1 + 0j, 0.3)
    total = busemann(zeta, x, y) + busemann(zeta, y, w)
    assert busemann(zeta, x, w) == pytest.approx(total, abs=1e-12)

def test_height_must_be_positive():
    with pytest.raises(ValueError):
        UHPoint(0j, 0.0)
