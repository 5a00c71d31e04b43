# MIT License

# Copyright (c) 2026-present kleinian-packing contributors

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Patterson-Sullivan side: truncated Poincare series atoms binned on a grid"""

import logging
from typing import Optional

import numpy as np

from ..errors import EmptySupport
from .grid import GridSpec, MeasureGrid
from .orbit_points import OrbitPointSet

__all__ = ("ps_measure_grid", "omega_from_ps", "DEFAULT_S_OFFSET", "DEFAULT_HEIGHT_CUT")

log = logging.getLogger(__name__)

DEFAULT_S_OFFSET = 0.02
DEFAULT_HEIGHT_CUT = 0.05

def ps_measure_grid(
    orbit: OrbitPointSet,
    s: float,
    spec: GridSpec,
    height_cut: float = DEFAULT_HEIGHT_CUT,
    delta: Optional[float] = None,
) -> MeasureGrid:
    """Bin deep orbit points at their boundary projection with weight ``exp(-s d(j, g j))``

    Only points below ``height_cut`` take part; they stand in for
    boundary atoms at ``z``. Pass ``delta`` to have ``s`` checked
    against a known exponent estimate.
    """
    if not s > 0:
        raise ValueError(f"exponent s must be positive, got {s}")
    if not 0 < height_cut <= 1:
        raise ValueError(f"height_cut must be in (0, 1], got {height_cut}")
    if delta is not None and s <= delta:
        raise ValueError(f"exponent s = {s} must exceed the critical estimate {delta}")

    deep = orbit.r < height_cut
    if not np.any(deep):
        raise EmptySupport(f"no orbit point lies below height {height_cut}")

    weights = np.exp(-s * orbit.dist[deep])
    hist = spec.histogram(orbit.z[deep], weights)
    log.debug(
        f"PS grid: {int(deep.sum())} atoms below height {height_cut}, " \
        f"{hist.sum() / weights.sum():.1%} of their weight inside the window"
    )
    return MeasureGrid(spec, hist, kind="patterson-sullivan").normalize()

def omega_from_ps(ps: MeasureGrid, delta: float) -> MeasureGrid:
    """Reweight by ``(|z|^2 + 1)^delta`` at cell centers and renormalize"""
    if not ps.normalized:
        raise ValueError("omega_from_ps needs a normalized grid")

    factor = (np.abs(ps.cell_centers()) ** 2 + 1) ** delta
    return MeasureGrid(ps.spec, ps.weights * factor, kind="omega").normalize()
