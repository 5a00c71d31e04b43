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
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..counting import Rectangle, Region
from ..errors import EmptySupport, GridMismatch, InvalidRegion
from ..tolerance import MASS_TOL

__all__ = ("GridSpec", "MeasureGrid")

log = logging.getLogger(__name__)

@dataclass(frozen=True)
class GridSpec:
    """``nx`` by ``ny`` cells over the window ``[xmin, xmax] x [ymin, ymax]``"""
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    nx: int = 16
    ny: int = 16

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise InvalidRegion(f"grid window is empty: {self.window}")
        if self.nx < 1 or self.ny < 1:
            raise InvalidRegion(f"grid needs at least one cell per axis, got {self.nx}x{self.ny}")

    @classmethod
    def around(cls, box, nx: int = 16, ny: int = 16, expand: float = 0.05):
        """Grid over ``box = (xmin, xmax, ymin, ymax)`` grown by ``expand`` of its size"""
        xmin, xmax, ymin, ymax = box
        dx = (xmax - xmin) * expand / 2
        dy = (ymax - ymin) * expand / 2
        return cls(xmin - dx, xmax + dx, ymin - dy, ymax + dy, int(nx), int(ny))

    @property
    def window(self) -> Tuple[float, float, float, float]:
        return (self.xmin, self.xmax, self.ymin, self.ymax)

    @property
    def shape(self) -> Tuple[int, int]:
        """Array shape of cell weights, rows along y"""
        return (self.ny, self.nx)

    def cell_centers(self) -> np.ndarray:
        xs = self.xmin + (np.arange(self.nx) + 0.5) * (self.xmax - self.xmin) / self.nx
        ys = self.ymin + (np.arange(self.ny) + 0.5) * (self.ymax - self.ymin) / self.ny
        return xs[np.newaxis, :] + 1j * ys[:, np.newaxis]

    def cell_region(self, row: int, col: int) -> Rectangle:
        wx = (self.xmax - self.xmin) / self.nx
        wy = (self.ymax - self.ymin) / self.ny
        return Rectangle(
            self.xmin + col * wx, self.xmin + (col + 1) * wx,
            self.ymin + row * wy, self.ymin + (row + 1) * wy,
        )

    def histogram(self, z: np.ndarray, weights: Optional[np.ndarray] = None) -> np.ndarray:
        """Bin points into cells; points outside the window are dropped"""
        z = np.asarray(z, dtype=complex)
        hist, _, _ = np.histogram2d(
            z.imag, z.real,
            bins=[self.ny, self.nx],
            range=[[self.ymin, self.ymax], [self.xmin, self.xmax]],
            weights=weights,
        )
        return hist

    def to_dict(self) -> dict:
        return {"window": list(self.window), "nx": self.nx, "ny": self.ny}

    @classmethod
    def from_dict(cls, data: dict):
        xmin, xmax, ymin, ymax = data["window"]
        return cls(xmin, xmax, ymin, ymax, int(data["nx"]), int(data["ny"]))

class MeasureGrid:
    """Cell-binned measure; ``weights[row, col]`` with rows along y"""
    def __init__(self, spec: GridSpec, weights, normalized=False, total_mass=None, kind=""):
        weights = np.asarray(weights, dtype=float)
        if weights.shape != spec.shape:
            raise GridMismatch(f"weights of shape {weights.shape} do not fit a {spec.nx}x{spec.ny} grid")
        if np.any(weights < 0):
            raise ValueError("measure weights must be nonnegative")
        if normalized and abs(weights.sum() - 1) > MASS_TOL:
            raise ValueError(f"normalized weights sum to {weights.sum()!r}, not 1")

        self.spec = spec
        self.weights = weights
        self.normalized = bool(normalized)
        self.total_mass = float(weights.sum()) if total_mass is None else float(total_mass)
        self.kind = kind

    def __repr__(self):
        return (
            f"<MeasureGrid kind={self.kind!r} {self.spec.nx}x{self.spec.ny} " \
            f"normalized={self.normalized} mass={self.total_mass:g}>"
        )

    def normalize(self):
        """Copy scaled to mass 1; ``total_mass`` keeps the mass before scaling"""
        mass = self.weights.sum()
        if mass <= 0:
            raise EmptySupport(f"{self.kind or 'measure'} grid has no mass in window {self.spec.window}")
        weights = self.weights / mass
        # Put the rounding residue on the heaviest cell
        weights.flat[np.argmax(weights)] += 1 - weights.sum()
        return MeasureGrid(self.spec, weights, True, self.total_mass, self.kind)

    def cell_centers(self) -> np.ndarray:
        return self.spec.cell_centers()

    def mass_in(self, region: Region) -> float:
        """Mass of the cells whose centers lie in ``region``"""
        inside = region.contains(self.cell_centers())
        return float(self.weights[inside].sum())

    def same_layout(self, other) -> bool:
        return self.spec == other.spec

    def flat(self) -> np.ndarray:
        return self.weights.ravel()

    def to_dict(self) -> dict:
        """JSON header; the weights themselves go to CSV"""
        data = self.spec.to_dict()
        data.update({
            "normalized": self.normalized,
            "total_mass": self.total_mass,
            "kind": self.kind,
        })
        return data
