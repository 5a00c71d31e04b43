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

"""Orbit of the base point j under a group, and growth-rate estimates"""

import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..counting import CountSeries, fit_exponent
from ..errors import InsufficientData
from ..geometry import J, UHPoint
from ..packing import GroupPresentation
from ..progress_bar import progress_bar_manager as pbm

__all__ = (
    "OrbitPointSet", "orbit_points", "poincare_sum",
    "ExponentEstimate", "critical_exponent_orbit", "critical_exponent_circles"
)

log = logging.getLogger(__name__)

# Rounding grid for (Re z, Im z, log r) when merging orbit points
POINT_GRID = 1e-9

def _dist_from(z, r, x: UHPoint) -> np.ndarray:
    num = np.abs(z - x.z) ** 2 + (r - x.r) ** 2
    return 2 * np.arcsinh(np.sqrt(num / (4 * r * x.r)))

class OrbitPointSet:
    """Atoms ``g(j)`` with word length and distance ``d(j, g(j))``"""
    def __init__(self, z, r, word_len, dist=None):
        self.z = np.asarray(z, dtype=complex)
        self.r = np.asarray(r, dtype=float)
        self.word_len = np.asarray(word_len, dtype=int)
        if not (self.z.shape == self.r.shape == self.word_len.shape):
            raise ValueError("orbit arrays must have the same shape")
        if np.any(self.r <= 0):
            raise ValueError("orbit points must have positive height")
        self.dist = _dist_from(self.z, self.r, J) if dist is None else np.asarray(dist, dtype=float)

    @classmethod
    def from_points(cls, points: Sequence[UHPoint], word_lens: Optional[Sequence[int]] = None):
        z = [p.z for p in points]
        r = [p.r for p in points]
        if word_lens is None:
            word_lens = [0] * len(points)
        return cls(z, r, word_lens)

    @classmethod
    def from_distances(cls, distances: Sequence[float], word_lens: Optional[Sequence[int]] = None):
        """Atoms on the vertical axis at the given distances from j"""
        distances = np.asarray(distances, dtype=float)
        if word_lens is None:
            word_lens = np.ones(distances.shape, dtype=int)
        return cls(np.zeros(distances.shape, dtype=complex), np.exp(distances), word_lens, distances)

    def __len__(self):
        return self.z.size

    def __iter__(self) -> Iterator[Tuple[UHPoint, int, float]]:
        for z, r, w, d in zip(self.z, self.r, self.word_len, self.dist):
            yield UHPoint(complex(z), float(r)), int(w), float(d)

    def points(self):
        return [UHPoint(complex(z), float(r)) for z, r in zip(self.z, self.r)]

    @property
    def max_word_len(self) -> int:
        return int(self.word_len.max()) if len(self) else 0

def orbit_points(presentation: GroupPresentation, max_word_len: int) -> OrbitPointSet:
    """``g(j)`` over all non-backtracking words up to ``max_word_len``

    Words are multiplied out as batched matrix products, one level at a time.
    Coinciding points are merged, keeping the shortest word.
    """
    if max_word_len < 0:
        raise ValueError(f"max_word_len must be nonnegative, got {max_word_len}")

    letters = presentation.letters()
    inverse_of = np.array(presentation.inverse_letters(), dtype=int)

    A = np.ones(1, dtype=complex)
    B = np.zeros(1, dtype=complex)
    C = np.zeros(1, dtype=complex)
    D = np.ones(1, dtype=complex)
    R = np.zeros(1, dtype=bool)
    last = np.full(1, -1, dtype=int)

    zs, rs, lens = [np.zeros(1, dtype=complex)], [np.ones(1)], [np.zeros(1, dtype=int)]

    pb = pbm.get_atoms_pb(recreate=True, desc="Orbit atoms")
    pb.update(1)
    for level in range(1, max_word_len + 1):
        if not letters or A.size == 0:
            break

        parts = []
        for pos, letter in enumerate(letters):
            allowed = last != inverse_of[pos]
            if last[0] == -1:
                allowed = np.ones(A.shape, dtype=bool)
            a, b, c, d, refl = A[allowed], B[allowed], C[allowed], D[allowed], R[allowed]

            g = letter.map
            # g o s with g a reflection uses conj(s)
            sa = np.where(refl, np.conj(g.a), g.a)
            sb = np.where(refl, np.conj(g.b), g.b)
            sc = np.where(refl, np.conj(g.c), g.c)
            sd = np.where(refl, np.conj(g.d), g.d)
            parts.append((
                a * sa + b * sc, a * sb + b * sd,
                c * sa + d * sc, c * sb + d * sd,
                refl ^ g.reflection,
                np.full(a.shape, pos, dtype=int),
            ))

        A, B, C, D, R, last = (np.concatenate(arrays) for arrays in zip(*parts))

        den = np.abs(C) ** 2 + np.abs(D) ** 2
        zs.append((B * np.conj(D) + A * np.conj(C)) / den)
        rs.append(1.0 / den)
        lens.append(np.full(A.shape, level, dtype=int))
        pb.update(A.size)
        log.debug(f"Orbit level {level}: {A.size} words")

    pb.close()

    z = np.concatenate(zs)
    r = np.concatenate(rs)
    word_len = np.concatenate(lens)
    words = z.size

    keys = np.stack([
        np.round(z.real / POINT_GRID),
        np.round(z.imag / POINT_GRID),
        np.round(np.log(r) / POINT_GRID),
    ], axis=1)
    _, first = np.unique(keys, axis=0, return_index=True)
    first.sort()

    points = OrbitPointSet(z[first], r[first], word_len[first])
    log.info(f"Orbit of j: {len(points)} distinct points from {words} words up to length {max_word_len}")
    return points

def poincare_sum(orbit: OrbitPointSet, s: float, x: UHPoint = J) -> float:
    """Truncated Poincare series ``sum exp(-s d(x, g j))``"""
    if not s > 0:
        raise ValueError(f"exponent s must be positive, got {s}")
    d = _dist_from(orbit.z, orbit.r, x)
    return float(np.exp(-s * d).sum())

@dataclass(frozen=True)
class ExponentEstimate:
    delta: float
    method: str
    stderr: float = 0.0
    window: Tuple[float, float] = (0.0, 0.0)
    residuals: Tuple[float, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "method": self.method,
            "stderr": self.stderr,
            "window": list(self.window),
        }

MIN_ATOMS = 100
MIN_SPAN = 3.0

def _complete_radius(orbit: OrbitPointSet) -> float:
    """Radius below which the word ball is taken to hold every orbit point"""
    d, w = orbit.dist, orbit.word_len
    top = orbit.max_word_len
    if top >= 2:
        shell = d[w == top].min()
        step = d[w == 1].max() if np.any(w == 1) else 0.0
        if shell - step >= MIN_SPAN:
            return float(shell - step)
        if shell >= MIN_SPAN:
            return float(shell)
    return float(d.max())

def critical_exponent_orbit(orbit: OrbitPointSet, r_max: Optional[float] = None, samples: int = 64) -> ExponentEstimate:
    """Slope of ``log #{g : d(j, g j) <= R}`` against ``R`` over ``[R_max / 2, R_max]``"""
    if len(orbit) < MIN_ATOMS:
        raise InsufficientData(f"need at least {MIN_ATOMS} orbit points, got {len(orbit)}")

    span = float(orbit.dist.max() - orbit.dist.min())
    if span < MIN_SPAN:
        raise InsufficientData(f"orbit points span {span:.3g} units of distance, need {MIN_SPAN:g}")

    hi = _complete_radius(orbit) if r_max is None else float(r_max)
    lo = hi / 2
    radii = np.linspace(lo, hi, samples)
    counts = np.searchsorted(np.sort(orbit.dist), radii, side="right")
    if np.any(counts == 0):
        raise InsufficientData(f"no orbit points within distance {lo:g}")

    coef, cov = np.polyfit(radii, np.log(counts), 1, cov=True)
    residuals = np.log(counts) - np.polyval(coef, radii)
    estimate = ExponentEstimate(
        float(coef[0]), "orbit-growth", math.sqrt(max(cov[0, 0], 0.0)), (lo, hi), tuple(residuals)
    )

    if not 0 <= estimate.delta <= 2:
        log.warning(f"Orbit growth rate {estimate.delta:.4f} is outside [0, 2]")
    log.info(f"Orbit growth exponent {estimate.delta:.4f} over R in [{lo:.3g}, {hi:.3g}]")
    return estimate

def critical_exponent_circles(series: CountSeries, window=None) -> ExponentEstimate:
    """The circle-count exponent as an :class:`ExponentEstimate`"""
    fit = fit_exponent(series, window)
    return ExponentEstimate(fit.exponent, "circle-count", fit.stderr, fit.window)
