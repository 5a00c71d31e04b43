import cmath

import pytest

from kleinian_packing.errors import InvalidPresentation, SchottkyConfigurationError
from kleinian_packing.geometry import (
    GeneralizedCircle,
    MobiusMap,
    apply_boundary,
    circle_transform,
)
from kleinian_packing.packing import (
    GroupPresentation,
    circle_key,
    descartes_reflect,
    schottky_build,
)

def test_schottky_pair_maps_boundary_to_boundary():
    presentation, seeds = schottky_build([((-2 + 0j, 1.0), (2 + 0j, 1.0))])
    g = presentation.generators[0]
    assert len(seeds) == 2
    for t in (0.0, 0.9, 2.0, 4.4):
        z = apply_boundary(g, -2 + cmath.exp(1j * t))
        assert abs(z - 2) == pytest.approx(1)
    assert circle_key(circle_transform(g, seeds[0])) == circle_key(seeds[1])

def test_schottky_interior_goes_outside():
    presentation, _ = schottky_build([((-2 + 0j, 1.0), (2 + 0j, 1.5))])
    g = presentation.generators[0]
    for z in (-2 + 0.5j, -2.3 + 0j, -1.5 + 0.1j):
        assert abs(apply_boundary(g, z) - 2) > 1.5

def test_schottky_letters():
    presentation, seeds = schottky_build([
        ((-2 + 0j, 0.5), (2 + 0j, 0.5)),
        ((-2j, 0.5), (2j, 0.5)),
    ])
    assert len(seeds) == 4
    assert presentation.involutions == (False, False)
    letters = presentation.letters()
    assert len(letters) == 4
    inv = presentation.inverse_letters()
    for pos, letter in enumerate(letters):
        product = letters[inv[pos]].map @ letter.map
        assert product.is_identity()

@pytest.mark.parametrize("pairs, state", [
    ([((-1 + 0j, 1.5), (1 + 0j, 1.5))], "overlap"),
    ([((-1 + 0j, 1.0), (1 + 0j, 1.0))], "touch"),
    ([((-3 + 0j, 1.0), (3 + 0j, 1.0)), ((-3 + 0.5j, 1.0), (0j, 0.5))], "overlap"),
])
def test_schottky_rejects_bad_disks(pairs, state):
    with pytest.raises(SchottkyConfigurationError, match=state):
        schottky_build(pairs)

def test_schottky_rejects_bad_radius():
    with pytest.raises(SchottkyConfigurationError):
        schottky_build([((0j, -1.0), (5 + 0j, 1.0))])

def test_dual_generators_mirror_descartes(gasket_root, dual_group):
    assert dual_group.involutions == (True,) * 4
    assert len(dual_group.letters()) == 4
    for i, g in enumerate(dual_group.generators):
        reflected = descartes_reflect(gasket_root, i + 1)
        for j, circle in enumerate(gasket_root.circles):
            image = circle_key(circle_transform(g, circle))
            assert image == circle_key(reflected.circles[j])

def test_involution_flag_checked():
    with pytest.raises(InvalidPresentation):
        GroupPresentation((MobiusMap.translation(1),), (True,))
    with pytest.raises(InvalidPresentation):
        GroupPresentation((MobiusMap.translation(1),), (True, False))
    with pytest.raises(InvalidPresentation):
        GroupPresentation(("not a map",))

def test_involutions_detected():
    s = MobiusMap.inversion(GeneralizedCircle.unit_circle())
    presentation = GroupPresentation((s, MobiusMap.translation(1)))
    assert presentation.involutions == (True, False)
    assert [l.power for l in presentation.letters()] == [1, 1, -1]

def test_permuted():
    gens = (MobiusMap.translation(1), MobiusMap.translation(1j))
    p = GroupPresentation(gens).permuted([1, 0])
    assert p.generators == gens[::-1]
    with pytest.raises(ValueError):
        GroupPresentation(gens).permuted([0, 0])
