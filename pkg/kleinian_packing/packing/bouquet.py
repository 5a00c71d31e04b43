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
from typing import List, NamedTuple

import numpy as np

from .packing import Packing
from ..tolerance import TANGENCY_TOL

__all__ = ("detect_bouquet", "BouquetResult")

log = logging.getLogger(__name__)

class BouquetResult(NamedTuple):
    found: bool
    witnesses: List[int]

    def __bool__(self):
        return self.found

def detect_bouquet(
    packing: Packing,
    point: complex,
    tol: float = TANGENCY_TOL,
    min_circles: int = 5,
    max_ratio: float = 0.5,
) -> BouquetResult:
    """Finite evidence of an infinite bouquet at ``point``

    Looks for circles through ``point`` (within ``tol``) whose centers sit on
    one normal line through it, forming two families on opposite sides. Every
    family needs two or more circles with strictly decreasing radii shrinking
    at least by ``max_ratio`` overall, and both together at least
    ``min_circles`` circles. Lines are ignored.
    """
    point = complex(point)
    arr = packing.arrays()
    idx = np.flatnonzero(~arr["is_line"])
    center = arr["center"][idx]
    radius = arr["radius"][idx]

    through = np.abs(np.abs(center - point) - radius) <= tol
    idx, center, radius = idx[through], center[through], radius[through]
    if idx.size < min_circles:
        return BouquetResult(False, [])

    # Direction of the common normal from the largest circle
    order = np.argsort(-radius)
    idx, center, radius = idx[order], center[order], radius[order]
    u0 = (center[0] - point) / abs(center[0] - point)

    offset = center - point
    along = (offset * np.conj(u0)).real
    across = (offset * np.conj(u0)).imag
    if np.any(np.abs(across) > tol):
        log.debug(f"Circles through {point} do not share a normal line")
        return BouquetResult(False, [])

    families = [along > 0, along < 0]
    witnesses = []
    for family in families:
        radii = radius[family]
        if radii.size < 2:
            return BouquetResult(False, [])
        if np.any(np.diff(radii) >= 0):
            # Two circles of one family with equal radius coincide
            return BouquetResult(False, [])
        if radii[-1] / radii[0] > max_ratio:
            return BouquetResult(False, [])
        witnesses.extend(int(i) for i in idx[family])

    if len(witnesses) < min_circles:
        return BouquetResult(False, [])

    log.info(f"Bouquet at {point}: {len(witnesses)} circles tangent there")
    return BouquetResult(True, sorted(witnesses))
