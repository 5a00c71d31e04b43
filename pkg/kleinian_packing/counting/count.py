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

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .region import Region
from ..errors import UnderEnumerated
from ..packing import Packing

__all__ = (
    "COUNT_MODES", "count", "count_series", "CountSeries",
    "ratio_series", "RatioReport", "dual_count_gap", "DualCountGap",
    "default_grid"
)

log = logging.getLogger(__name__)

COUNT_MODES = ("meets", "center", "contained", "hemisphere")

def _check_mode(mode):
    if mode not in COUNT_MODES:
        raise ValueError(f"'{mode}' is not valid count mode, must be one of {COUNT_MODES}")

def _check_bound(packing: Packing, T: float):
    if T > packing.bound:
        raise UnderEnumerated(T, packing.bound)

def _static_mask(packing: Packing, region: Region, mode: str) -> np.ndarray:
    """Circles (not lines) passing a predicate that does not depend on T"""
    arr = packing.arrays()
    circles = ~arr["is_line"]
    mask = np.zeros(len(packing), dtype=bool)
    if not circles.any():
        return mask

    center = arr["center"][circles]
    radius = arr["radius"][circles]
    if mode == "meets":
        mask[circles] = region.disk_meets(center, radius)
    elif mode == "center":
        mask[circles] = region.contains(center)
    elif mode == "contained":
        mask[circles] = region.disk_inside(center, radius)
    return mask

def _line_count(packing: Packing, region: Region, mode: str) -> int:
    if mode == "meets":
        return sum(1 for line in packing.lines() if region.line_meets(line))
    if mode == "contained":
        return sum(1 for line in packing.lines() if region.line_inside(line))
    # Lines have no center and no hemisphere of finite height
    return 0

def _hemisphere_count(packing: Packing, region: Region, T: float) -> int:
    arr = packing.arrays()
    mask = (~arr["is_line"]) & (arr["curvature"] < T)
    radius = arr["radius"][mask]
    center = arr["center"][mask]

    # The hemisphere over C at height h sits over the circle of radius
    # sqrt(rho^2 - h^2); heights in (1/T, 1] sweep an annulus
    tall = radius > 1.0 / T
    radius, center = radius[tall], center[tall]
    r_in = np.sqrt(np.maximum(radius ** 2 - 1.0, 0.0))
    r_out = np.sqrt(radius ** 2 - 1.0 / T ** 2)
    return int(np.count_nonzero(region.annulus_meets(center, r_in, r_out)))

def count(packing: Packing, region: Region, T: float, mode: str = "meets") -> int:
    """``N_T(P, E)``: circles of curvature below ``T`` related to ``region`` by ``mode``

    * ``meets``: the open disk meets the region (lines: the line meets it)
    * ``center``: the center lies in the region
    * ``contained``: the closed disk lies in the region
    * ``hemisphere``: the hemisphere over the circle passes over the region
      at some height in ``(1/T, 1]``
    """
    _check_mode(mode)
    _check_bound(packing, T)

    if mode == "hemisphere":
        return _hemisphere_count(packing, region, T)

    mask = _static_mask(packing, region, mode)
    mask &= packing.curvatures() < T
    return int(np.count_nonzero(mask)) + _line_count(packing, region, mode)

@dataclass(frozen=True)
class CountSeries:
    T: Tuple[float, ...]
    N: Tuple[int, ...]
    mode: str = "meets"
    region: Optional[Region] = None
    source: dict = field(default_factory=dict)

    def __post_init__(self):
        T = tuple(float(t) for t in self.T)
        N = tuple(int(n) for n in self.N)
        if len(T) != len(N):
            raise ValueError(f"series has {len(T)} T values but {len(N)} counts")
        if any(b <= a for a, b in zip(T, T[1:])):
            raise ValueError("T grid must be strictly increasing")
        if any(n < 0 for n in N):
            raise ValueError("counts must be nonnegative")
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "N", N)

    def __len__(self):
        return len(self.T)

    def subseries(self, indices: Sequence[int]):
        indices = sorted(indices)
        return CountSeries(
            tuple(self.T[i] for i in indices),
            tuple(self.N[i] for i in indices),
            self.mode,
            self.region,
            self.source,
        )

    def rows(self) -> List[Tuple[float, int]]:
        return list(zip(self.T, self.N))

def _check_grid(T_grid) -> np.ndarray:
    grid = np.asarray(T_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("T grid must be a nonempty list")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("T grid must be strictly increasing")
    if grid[0] <= 0:
        raise ValueError("T grid values must be positive")
    return grid

def count_series(
    packing: Packing,
    region: Region,
    T_grid: Sequence[float],
    mode: str = "meets",
) -> CountSeries:
    """``count()`` at every point of ``T_grid``"""
    _check_mode(mode)
    grid = _check_grid(T_grid)
    _check_bound(packing, float(grid[-1]))

    if mode == "hemisphere":
        values = [_hemisphere_count(packing, region, float(T)) for T in grid]
    else:
        # The predicate is T independent: count matching curvatures below each T
        mask = _static_mask(packing, region, mode)
        curvatures = np.sort(packing.curvatures()[mask])
        lines = _line_count(packing, region, mode)
        values = np.searchsorted(curvatures, grid, side="left") + lines

    series = CountSeries(tuple(grid), tuple(int(v) for v in values), mode, region, packing.source)
    log.debug(f"Count series ({mode}) over {len(series)} points: {series.N}")
    return series

@dataclass(frozen=True)
class RatioReport:
    T: Tuple[float, ...]
    ratios: Tuple[float, ...]
    flagged: Tuple[int, ...]
    last_value: float
    max_drift: float

    def rows(self):
        return list(zip(self.T, self.ratios))

def _final_decade(T: Sequence[float]) -> List[int]:
    last = T[-1]
    return [i for i, t in enumerate(T) if t >= last / 10]

def ratio_series(
    packing: Packing,
    region1: Region,
    region2: Region,
    T_grid: Sequence[float],
    mode: str = "meets",
) -> RatioReport:
    """``N_T(E1) / N_T(E2)`` along ``T_grid``

    Points where ``N_T(E2) = 0`` get ``nan`` and are listed in ``flagged``.
    ``max_drift`` is the spread of the finite ratios over the final decade of
    ``T`` relative to the last finite ratio.
    """
    s1 = count_series(packing, region1, T_grid, mode)
    s2 = count_series(packing, region2, T_grid, mode)

    ratios = []
    flagged = []
    for pos, (n1, n2) in enumerate(zip(s1.N, s2.N)):
        if n2 == 0:
            flagged.append(pos)
            ratios.append(math.nan)
        else:
            ratios.append(n1 / n2)

    if flagged:
        log.warning(
            f"N_T(E2) is zero at {len(flagged)} grid points " \
            f"(T = {', '.join(f'{s1.T[i]:g}' for i in flagged)}), ratios flagged"
        )

    finite = [(i, r) for i, r in enumerate(ratios) if not math.isnan(r)]
    if finite:
        last_value = finite[-1][1]
        tail = [ratios[i] for i in _final_decade(s1.T) if not math.isnan(ratios[i])]
        if last_value != 0 and tail:
            max_drift = (max(tail) - min(tail)) / abs(last_value)
        else:
            max_drift = 0.0 if tail and max(tail) == min(tail) else math.inf
    else:
        last_value = math.nan
        max_drift = math.nan

    return RatioReport(s1.T, tuple(ratios), tuple(flagged), last_value, max_drift)

@dataclass(frozen=True)
class DualCountGap:
    T: Tuple[float, ...]
    meets: Tuple[int, ...]
    center: Tuple[int, ...]
    gaps: Tuple[int, ...]
    max_gap: int

    def rows(self):
        return list(zip(self.T, self.gaps))

def dual_count_gap(packing: Packing, region: Region, T_grid: Sequence[float]) -> DualCountGap:
    """``|N_meets - N_center|`` along ``T_grid``

    Stays bounded for regions where every disk meeting the region lies in it
    up to finitely many exceptions.
    """
    meets = count_series(packing, region, T_grid, "meets")
    center = count_series(packing, region, T_grid, "center")
    gaps = tuple(abs(m - c) for m, c in zip(meets.N, center.N))
    return DualCountGap(meets.T, meets.N, center.N, gaps, max(gaps))

def default_grid(
    t_max: float,
    t_min: Optional[float] = None,
    points: int = 25,
    ratio: float = math.sqrt(2),
) -> List[float]:
    """Geometric grid with step ``ratio`` ending at ``t_max``

    With ``t_min`` the grid starts at the first step at or above it,
    otherwise it has ``points`` entries.
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    if t_min is not None:
        if not 0 < t_min <= t_max:
            raise ValueError(f"t_min must be in (0, {t_max:g}], got {t_min}")
        points = int(math.floor(math.log(t_max / t_min) / math.log(ratio) + 1e-9)) + 1
    if points < 1:
        raise ValueError(f"grid needs at least one point, got {points}")
    return [t_max / ratio ** (points - 1 - k) for k in range(points)]
