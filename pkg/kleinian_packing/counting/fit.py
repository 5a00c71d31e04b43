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
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .count import CountSeries
from ..errors import InsufficientData

__all__ = ("FitResult", "fit_exponent", "default_window")

log = logging.getLogger(__name__)

MIN_FIT_POINTS = 4

@dataclass(frozen=True)
class FitResult:
    exponent: float
    intercept: float
    stderr: float
    window: Tuple[float, float]
    points: int = 0

    @property
    def constant(self) -> float:
        """``c`` in ``N ~ c T^delta``"""
        return math.exp(self.intercept)

    def to_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "intercept": self.intercept,
            "stderr": self.stderr,
            "window": list(self.window),
        }

def default_window(series: CountSeries) -> Tuple[float, float]:
    """Series range without its smallest decade

    Falls back to the full range when dropping the decade leaves too few points.
    """
    lo, hi = series.T[0], series.T[-1]
    dropped = lo * 10
    if sum(1 for t in series.T if dropped <= t <= hi) >= MIN_FIT_POINTS:
        return (dropped, hi)

    log.debug(f"Series spans less than a decade beyond {lo:g}, fitting the full range")
    return (lo, hi)

def fit_exponent(series: CountSeries, window: Optional[Tuple[float, float]] = None) -> FitResult:
    """Weighted least squares of ``log N`` against ``log T``

    Points in ``window`` with ``N > 0`` are used, weighted by ``sqrt(N)``.
    """
    if window is None:
        window = default_window(series)

    lo, hi = window
    if lo > hi:
        raise InsufficientData(f"fit window [{lo:g}, {hi:g}] is empty")
    if len(series) and (lo < series.T[0] * (1 - 1e-12) or hi > series.T[-1] * (1 + 1e-12)):
        raise InsufficientData(
            f"fit window [{lo:g}, {hi:g}] is outside the series range " \
            f"[{series.T[0]:g}, {series.T[-1]:g}]"
        )

    T = np.array([t for t, n in series.rows() if lo <= t <= hi and n > 0])
    N = np.array([n for t, n in series.rows() if lo <= t <= hi and n > 0], dtype=float)
    if T.size < MIN_FIT_POINTS:
        raise InsufficientData(
            f"need at least {MIN_FIT_POINTS} points with N > 0 in [{lo:g}, {hi:g}], got {T.size}"
        )

    coef, cov = np.polyfit(np.log(T), np.log(N), 1, w=np.sqrt(N), cov=True)
    slope, intercept = coef
    stderr = math.sqrt(max(cov[0, 0], 0.0))

    result = FitResult(float(slope), float(intercept), stderr, (float(lo), float(hi)), int(T.size))
    log.info(f"Fitted exponent {result.exponent:.4f} +/- {result.stderr:.4f} over T in [{lo:g}, {hi:g}]")
    return result
