import logging
from pathlib import Path

import numpy as np
import pytest

from kleinian_packing.packing import (
    DescartesQuadruple,
    apollonian_dual_group,
    apollonian_enumerate,
)
from kleinian_packing.progress_bar import progress_bar_manager

FIXTURES = Path(__file__).parent / "fixtures"

# Curvature and curvature-center (k * center) of the (-1, 2, 2, 3) root
GASKET_ROOT_KW = ((-1.0, 0j), (2.0, 1 + 0j), (2.0, -1 + 0j), (3.0, 2j))

@pytest.fixture(autouse=True)
def no_progress_bars():
    progress_bar_manager.disabled = True
    yield
    progress_bar_manager.close_all()

@pytest.fixture(autouse=True)
def reset_cli_logging():
    yield
    log = logging.getLogger("kleinian_packing")
    for handler in list(log.handlers):
        if getattr(handler, "_from_cli", False):
            log.removeHandler(handler)
    log.setLevel(logging.NOTSET)

@pytest.fixture
def rng():
    return np.random.default_rng(12345)

@pytest.fixture(scope="session")
def gasket_root():
    return DescartesQuadruple.from_curvatures(-1, 2, 2, 3)

@pytest.fixture(scope="session")
def gasket_100(gasket_root):
    return apollonian_enumerate(gasket_root, 100)

@pytest.fixture(scope="session")
def gasket_1000(gasket_root):
    return apollonian_enumerate(gasket_root, 1000)

@pytest.fixture(scope="session")
def dual_group(gasket_root):
    return apollonian_dual_group(gasket_root)

@pytest.fixture(scope="session")
def strip_packing():
    return apollonian_enumerate(DescartesQuadruple.strip(), 50, (-1.0, 9.0, -1.0, 1.0))

@pytest.fixture
def fixtures_dir():
    return FIXTURES

def descartes_oracle(T, root=GASKET_ROOT_KW):
    """Brute-force depth-first walk of the Descartes tree on (k, k * center) pairs

    Returns ``{key: (k, center)}`` for every circle with ``|k| < T``, root included.
    """
    def key(k, w):
        return (round(k * 1e6), round(w.real * 1e6), round(w.imag * 1e6))

    found = {key(k, w): (k, w / k) for k, w in root}
    stack = [(tuple(root), -1)]
    while stack:
        quad, last = stack.pop()
        for i in range(4):
            if i == last:
                continue
            others = [quad[j] for j in range(4) if j != i]
            k = 2 * sum(o[0] for o in others) - quad[i][0]
            w = 2 * sum(o[1] for o in others) - quad[i][1]
            if abs(k) >= T:
                continue
            found.setdefault(key(k, w), (k, w / k))
            stack.append((quad[:i] + ((k, w),) + quad[i + 1:], i))
    return found

@pytest.fixture(scope="session")
def oracle():
    return descartes_oracle
