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
import threading
from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from ..geometry import GeneralizedCircle, MobiusMap, circle_transform
from ..tolerance import DEDUP_GRID

__all__ = ("CircleRecord", "Packing", "DedupIndex", "circle_key")

log = logging.getLogger(__name__)

def circle_key(circle: GeneralizedCircle):
    """Unoriented canonical key: a circle and its reversal share one key"""
    key = circle.canonical_key(DEDUP_GRID)
    if key[0] < 0 or (key[0] == 0 and (key[1], key[2]) < (0, 0)):
        key = tuple(-k for k in key)
    return key

class CircleRecord(NamedTuple):
    """One row of the packing CSV"""
    kind: str
    curvature: float
    cx: Optional[float]
    cy: Optional[float]
    nx: Optional[float]
    ny: Optional[float]
    offset: Optional[float]
    word_len: int

    @classmethod
    def from_circle(cls, circle: GeneralizedCircle, word_len: int):
        if circle.is_line:
            n = circle.normal
            return cls("line", 0.0, None, None, n.real, n.imag, circle.offset, word_len)

        p = circle.center
        return cls("circle", circle.signed_curvature, p.real, p.imag, None, None, None, word_len)

    def to_circle(self) -> GeneralizedCircle:
        if self.kind == "line":
            return GeneralizedCircle.from_line(complex(self.nx, self.ny), self.offset)
        # Keeps a == curvature bit for bit
        k = self.curvature
        return GeneralizedCircle(k, complex(-k * self.cx, -k * self.cy), k * (self.cx ** 2 + self.cy ** 2) - 1 / k)

    def sort_key(self):
        """Canonical emission order: curvature, then center (lines by normal and offset)"""
        if self.kind == "line":
            return (self.curvature, 1, self.nx, self.ny, self.offset)
        return (self.curvature, 0, self.cx, self.cy, 0.0)

class DedupIndex:
    """Canonical-key index with linearizable insert-if-absent

    Every key remembers the enumeration level it was first seen at and a
    provenance value; when two workers race on the same key within one level
    the smaller provenance wins, so the final content does not depend on
    scheduling.
    """
    def __init__(self, near_miss_check=True):
        self._data: Dict[tuple, tuple] = {}
        self._lock = threading.Lock()
        self.near_miss_check = near_miss_check
        self.attempts = 0
        self.collisions = 0
        self.near_misses = 0

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def get(self, key, default=None):
        return self._data.get(key, default)

    def items(self):
        return self._data.items()

    def level_of(self, key) -> Optional[int]:
        value = self._data.get(key)
        return None if value is None else value[0]

    def _has_neighbour(self, key) -> bool:
        for pos in range(len(key)):
            for step in (-1, 1):
                neighbour = key[:pos] + (key[pos] + step,) + key[pos + 1:]
                if neighbour in self._data:
                    return True
        return False

    def insert_if_absent(self, key, level: int, provenance=None) -> bool:
        """Insert ``key``; return ``True`` if it was not present before"""
        with self._lock:
            self.attempts += 1
            existing = self._data.get(key)
            if existing is None:
                if self.near_miss_check and self._has_neighbour(key):
                    self.near_misses += 1
                self._data[key] = (level, provenance)
                return True

            self.collisions += 1
            old_level, old_provenance = existing
            if (
                old_level == level
                and provenance is not None
                and (old_provenance is None or provenance < old_provenance)
            ):
                self._data[key] = (level, provenance)
            return False

    def check_collision_rate(self, threshold=0.01):
        """Warn when many new keys sit one grid step away from an existing key"""
        new = len(self._data)
        if new == 0:
            return
        rate = self.near_misses / new
        if rate > threshold:
            log.warning(
                f"{self.near_misses} of {new} circles landed next to an existing dedup key " \
                f"(rate {rate:.2%}). The dedup grid ({DEDUP_GRID:g}) may be too fine " \
                "for the numerical noise of this enumeration"
            )

class Packing:
    """Deduplicated finite set of circles with provenance

    The first ``seed_count`` circles are the retained seeds; every other circle
    has curvature below ``bound``.
    """
    def __init__(
        self,
        circles: Sequence[GeneralizedCircle],
        word_lens: Sequence[int],
        parents: Sequence[int],
        bound: float,
        source: Optional[dict] = None,
        seed_count: int = 0,
        stats: Optional[dict] = None,
        records: Optional[Sequence[CircleRecord]] = None,
    ):
        if not (len(circles) == len(word_lens) == len(parents)):
            raise ValueError("circles, word_lens and parents must have the same length")

        self._circles = tuple(circles)
        self._word_lens = tuple(int(w) for w in word_lens)
        self._parents = tuple(int(p) for p in parents)
        self.bound = float(bound)
        self.source = dict(source or {})
        self.seed_count = int(seed_count)
        self.stats = dict(stats or {})
        self._records = tuple(records) if records is not None else None

        self._index = {}
        for pos, circle in enumerate(self._circles):
            key = circle_key(circle)
            if key in self._index:
                raise ValueError(
                    f"circle {pos} duplicates circle {self._index[key]} (key {key})"
                )
            self._index[key] = pos

        self._arrays = None

    def __len__(self):
        return len(self._circles)

    def __iter__(self):
        return iter(self._circles)

    def __getitem__(self, pos) -> GeneralizedCircle:
        return self._circles[pos]

    def __contains__(self, circle: GeneralizedCircle):
        return circle_key(circle) in self._index

    def __repr__(self):
        return f"<Packing circles={len(self)} bound={self.bound:g} source={self.source.get('type')}>"

    @property
    def circles(self):
        return self._circles

    @property
    def word_lens(self):
        return self._word_lens

    @property
    def parents(self):
        return self._parents

    def index_of(self, circle: GeneralizedCircle) -> Optional[int]:
        return self._index.get(circle_key(circle))

    def keys(self) -> set:
        return set(self._index.keys())

    def is_seed(self, pos: int) -> bool:
        return pos < self.seed_count

    @property
    def records(self) -> List[CircleRecord]:
        if self._records is None:
            self._records = tuple(
                CircleRecord.from_circle(c, w) for c, w in zip(self._circles, self._word_lens)
            )
        return list(self._records)

    def sorted_records(self) -> List[CircleRecord]:
        return sorted(self.records, key=CircleRecord.sort_key)

    # Vectorised views used by the counting and measure code

    def arrays(self) -> dict:
        """Built from the records, so a packing read back from CSV gives identical arrays"""
        if self._arrays is None:
            n = len(self._circles)
            is_line = np.zeros(n, dtype=bool)
            curvature = np.zeros(n)
            center = np.full(n, np.nan, dtype=complex)
            radius = np.full(n, np.inf)
            for pos, record in enumerate(self.records):
                if record.kind == "line":
                    is_line[pos] = True
                    continue
                curvature[pos] = abs(record.curvature)
                center[pos] = complex(record.cx, record.cy)
                radius[pos] = 1 / curvature[pos]

            self._arrays = {
                "is_line": is_line,
                "curvature": curvature,
                "center": center,
                "radius": radius,
            }
        return self._arrays

    def curvatures(self) -> np.ndarray:
        return self.arrays()["curvature"]

    def lines(self) -> List[GeneralizedCircle]:
        return [c for c in self._circles if c.is_line]

    def bounding_box(self):
        """``(xmin, xmax, ymin, ymax)`` over all circles, or ``None`` if there are none"""
        arr = self.arrays()
        mask = ~arr["is_line"]
        if not mask.any():
            return None
        center = arr["center"][mask]
        radius = arr["radius"][mask]
        return (
            float(np.min(center.real - radius)),
            float(np.max(center.real + radius)),
            float(np.min(center.imag - radius)),
            float(np.max(center.imag + radius)),
        )

    def rescaled(self, lam: float, p: complex = 0j):
        """Image under ``g0 = n_p a_{log lam}``; the curvature bound becomes ``bound / lam``"""
        g0 = MobiusMap.scaling(lam, p)
        circles = [circle_transform(g0, c) for c in self._circles]
        source = dict(self.source)
        source["rescaled"] = {"lambda": lam, "p": [complex(p).real, complex(p).imag]}
        return Packing(
            circles,
            self._word_lens,
            self._parents,
            self.bound / lam,
            source=source,
            seed_count=self.seed_count,
            stats=self.stats,
        )

    def same_circles(self, other) -> bool:
        return self.keys() == other.keys()
