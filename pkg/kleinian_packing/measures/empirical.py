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

"""Empirical limiting measure from small circles, and grid comparisons"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..counting import Region, count
from ..errors import EmptySupport, GridMismatch, UnderEnumerated
from ..packing import Packing
from .grid import GridSpec, MeasureGrid

__all__ = (
    "omega_empirical", "compare_measures", "MeasureComparison",
    "constant_consistency", "ConstantReport"
)

log = logging.getLogger(__name__)

def omega_empirical(packing: Packing, spec: GridSpec, T: float, kappa: float = 2.0) -> MeasureGrid:
    """Unit mass at the center of every circle with curvature in ``[T, kappa T)``"""
    if not T > 0 or not kappa > 1:
        raise ValueError(f"need T > 0 and kappa > 1, got T={T}, kappa={kappa}")

    upper = kappa * T
    # T * (KT / T) may overshoot KT by an ulp
    if upper > packing.bound * (1 + 1e-12):
        raise UnderEnumerated(upper, packing.bound)

    arrays = packing.arrays()
    curv = arrays["curvature"]
    window = (~arrays["is_line"]) & (curv >= T) & (curv < upper)
    if not np.any(window):
        raise EmptySupport(f"no circle has curvature in [{T:g}, {upper:g})")

    hist = spec.histogram(arrays["center"][window])
    if hist.sum() == 0:
        raise EmptySupport(f"no circle with curvature in [{T:g}, {upper:g}) is centered in window {spec.window}")

    log.debug(f"Empirical grid: {int(window.sum())} circles with curvature in [{T:g}, {upper:g})")
    return MeasureGrid(spec, hist, kind="empirical").normalize()

@dataclass(frozen=True)
class MeasureComparison:
    pearson: float
    total_variation: float

    def to_dict(self) -> dict:
        return {"pearson": self.pearson, "total_variation": self.total_variation}

def compare_measures(m1: MeasureGrid, m2: MeasureGrid) -> MeasureComparison:
    """Pearson correlation of the cell vectors and total variation distance"""
    if not m1.same_layout(m2):
        raise GridMismatch(f"cannot compare grids with layouts {m1.spec} and {m2.spec}")
    if not (m1.normalized and m2.normalized):
        raise ValueError("compare_measures needs normalized grids")

    w1, w2 = m1.flat(), m2.flat()
    tv = 0.5 * float(np.abs(w1 - w2).sum())

    if np.array_equal(w1, w2):
        pearson = 1.0
    elif w1.std() == 0 or w2.std() == 0:
        # Correlation with a constant vector is undefined
        pearson = 0.0
    else:
        pearson = float(np.corrcoef(w1, w2)[0, 1])

    return MeasureComparison(pearson, tv)

@dataclass(frozen=True)
class ConstantReport:
    constants: Tuple[float, ...]
    spread: float
    counts: Tuple[int, ...]
    masses: Tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "constants": list(self.constants),
            "spread": self.spread,
            "counts": list(self.counts),
            "masses": list(self.masses),
        }

def constant_consistency(
    packing: Packing,
    regions: Sequence[Region],
    T: float,
    delta: float,
    omega: MeasureGrid,
    mode: str = "meets",
) -> ConstantReport:
    """``N_T(E) / (T^delta omega(E))`` per region and their relative spread"""
    if not regions:
        raise ValueError("constant_consistency needs at least one region")

    constants, counts, masses = [], [], []
    for region in regions:
        mass = omega.mass_in(region)
        if mass <= 0:
            raise EmptySupport(f"region {region!r} carries no mass of the {omega.kind or 'given'} grid")
        n = count(packing, region, T, mode)
        counts.append(n)
        masses.append(mass)
        constants.append(n / (T ** delta * mass))

    positive = [c for c in constants if c > 0]
    spread = max(constants) / min(positive) - 1 if positive else float("inf")
    if len(positive) < len(constants):
        log.warning("Some regions hold no circles, the constant spread is unbounded")
        spread = float("inf")

    return ConstantReport(tuple(constants), float(spread), tuple(counts), tuple(masses))
