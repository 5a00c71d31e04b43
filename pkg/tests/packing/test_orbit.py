import numpy as np
import pytest

from kleinian_packing.counting import Rectangle, count
from kleinian_packing.format import emit_packing_csv
from kleinian_packing.geometry import GeneralizedCircle
from kleinian_packing.packing import (
    GroupPresentation,
    apollonian_enumerate,
    orbit_enumerate,
    schottky_build,
)

SCHOTTKY_PAIRS = [
    ((-2 + 0j, 0.5), (2 + 0j, 0.5)),
    ((-2j, 0.5), (2j, 0.5)),
]

@pytest.fixture(scope="module")
def schottky():
    return schottky_build(SCHOTTKY_PAIRS)

@pytest.fixture(scope="module")
def schottky_packing(schottky):
    presentation, seeds = schottky
    return orbit_enumerate(presentation, seeds, 1e4, 10, prune=True)

def test_dual_group_orbit_is_the_gasket(gasket_root, dual_group):
    descartes = apollonian_enumerate(gasket_root, 50)
    orbit = orbit_enumerate(dual_group, gasket_root.circles, 50, 40, prune=True)
    assert orbit.same_circles(descartes)
    assert orbit.seed_count == 4

def test_generator_order_does_not_matter(gasket_root, dual_group):
    first = orbit_enumerate(dual_group, gasket_root.circles, 30, 40, prune=True)
    permuted = orbit_enumerate(dual_group.permuted([2, 0, 3, 1]), gasket_root.circles, 30, 40, prune=True)
    assert first.same_circles(permuted)
    assert emit_packing_csv(first, sort=True) == emit_packing_csv(permuted, sort=True)

def test_dual_group_orbit_is_the_larger_gasket(gasket_root, dual_group, gasket_1000):
    orbit = orbit_enumerate(dual_group, gasket_root.circles, 1000, 100, prune=True)
    assert orbit.same_circles(gasket_1000)
    assert orbit.stats["levels"] < 100

@pytest.mark.parametrize("T, depth", [(30, 6), (1000, 8)])
def test_pruning_matches_depth_capped_run(gasket_root, dual_group, T, depth):
    pruned = orbit_enumerate(dual_group, gasket_root.circles, T, depth, prune=True)
    full = orbit_enumerate(dual_group, gasket_root.circles, T, depth, prune=False)
    assert pruned.keys() == full.keys()
    assert full.stats["words"] > pruned.stats["words"]

def test_orbit_images_are_exact(gasket_root, dual_group, gasket_1000):
    full = orbit_enumerate(dual_group, gasket_root.circles, 1000, 9)
    # Every enumerated circle is a gasket circle, with no near-duplicates
    assert full.keys() <= gasket_1000.keys()
    k = full.curvatures()
    assert np.allclose(k, np.round(k), rtol=0, atol=1e-9)

def test_window_count_saturates(gasket_root, dual_group):
    window = Rectangle(0.1, 0.4, 0.1, 0.4)
    counts = [
        count(orbit_enumerate(dual_group, gasket_root.circles, 200, depth, prune=True), window, 200)
        for depth in (5, 10, 60, 120)
    ]
    assert counts[0] <= counts[1] <= counts[2]
    assert counts[2] == counts[3] == count(apollonian_enumerate(gasket_root, 200), window, 200)

def test_depth_zero_and_empty_group(gasket_root, dual_group):
    seeds_only = orbit_enumerate(dual_group, gasket_root.circles, 100, 0)
    assert len(seeds_only) == 4

    empty = orbit_enumerate(GroupPresentation(()), gasket_root.circles, 100, 10)
    assert len(empty) == 4
    assert empty.word_lens == (0, 0, 0, 0)

def test_seeds_kept_beyond_bound(gasket_root, dual_group):
    packing = orbit_enumerate(dual_group, gasket_root.circles, 1.0, 5)
    assert len(packing) == 4

def test_bad_arguments(gasket_root, dual_group):
    with pytest.raises(ValueError):
        orbit_enumerate(dual_group, gasket_root.circles, 0, 5)
    with pytest.raises(ValueError):
        orbit_enumerate(dual_group, gasket_root.circles, 10, -1)
    with pytest.raises(ValueError):
        orbit_enumerate(dual_group, gasket_root.circles, 10, 5, patience=0)

def test_schottky_circles_disjoint_or_nested(schottky_packing):
    arr = schottky_packing.arrays()
    center = arr["center"]
    radius = arr["radius"]
    assert len(schottky_packing) > 4

    d = np.abs(center[:, None] - center[None, :])
    r1, r2 = radius[:, None], radius[None, :]
    tol = 1e-9 * np.maximum(1, np.maximum(r1, r2))
    disjoint = d >= r1 + r2 - tol
    nested = d <= np.abs(r1 - r2) + tol
    off_diagonal = ~np.eye(len(schottky_packing), dtype=bool)
    assert np.all((disjoint | nested)[off_diagonal])

def test_schottky_images_inside_seed_disks(schottky_packing, schottky):
    _, seeds = schottky
    for pos in range(schottky_packing.seed_count, len(schottky_packing)):
        circle = schottky_packing[pos]
        assert any(abs(circle.center - s.center) < s.radius for s in seeds)

def test_workers_do_not_change_result(schottky, schottky_packing, monkeypatch):
    monkeypatch.delenv("CIRCLES_THREADS", raising=False)
    presentation, seeds = schottky
    parallel = orbit_enumerate(presentation, seeds, 1e4, 10, prune=True, workers=8)
    assert parallel.same_circles(schottky_packing)
    assert emit_packing_csv(parallel) == emit_packing_csv(schottky_packing)

def test_window_limits_orbit(gasket_root, dual_group):
    window = (0.0, 1.0, 0.0, 1.0)
    packing = orbit_enumerate(dual_group, gasket_root.circles, 30, 40, prune=True, window=window)
    full = apollonian_enumerate(gasket_root, 30)
    assert packing.keys() <= full.keys()
    for pos in range(packing.seed_count, len(packing)):
        circle = packing[pos]
        assert circle.center.real + circle.radius > 0 and circle.center.imag + circle.radius > 0

def test_seed_order_is_kept():
    seeds = [GeneralizedCircle.from_center_radius(complex(x, 0), 0.1) for x in (3, 1, 2)]
    packing = orbit_enumerate(GroupPresentation(()), seeds, 100, 3)
    assert list(packing.circles) == seeds
