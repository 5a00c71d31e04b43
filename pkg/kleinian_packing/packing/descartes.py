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

"""Descartes quadruples and the Apollonian gasket enumerator"""

import cmath
import heapq
import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .packing import Packing, circle_key
from ..errors import DescartesViolation
from ..geometry import GeneralizedCircle
from ..progress_bar import progress_bar_manager as pbm
from ..tolerance import ALGEBRAIC_TOL, DESCARTES_TOL, TANGENCY_TOL

__all__ = (
    "DescartesQuadruple", "descartes_reflect", "descartes_residuals",
    "apollonian_enumerate"
)

log = logging.getLogger(__name__)

Coords = Tuple[float, complex, float]

def descartes_residuals(coords: Sequence[Coords]) -> Tuple[float, float]:
    """Residuals of the curvature and curvature-center Descartes relations

    ``(sum k)^2 - 2 sum k^2`` and ``|(sum w)^2 - 2 sum w^2|`` with ``w = k * center = -b``.
    """
    ks = [c[0] for c in coords]
    ws = [c[1] for c in coords]
    res_k = sum(ks) ** 2 - 2 * sum(k * k for k in ks)
    res_w = sum(ws) ** 2 - 2 * sum(w * w for w in ws)
    return res_k, abs(res_w)

def _scale(coords: Sequence[Coords]) -> float:
    return max(max(abs(c[0]), abs(c[1])) for c in coords) ** 2

def _curvature_residual(coords: Sequence[Coords]) -> float:
    k1, k2, k3, k4 = (c[0] for c in coords)
    return (k1 + k2 + k3 + k4) ** 2 - 2 * (k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4)

def _satisfies(coords: Sequence[Coords], tol=DESCARTES_TOL) -> bool:
    """Curvature relation within ``tol`` absolute, center relation relative to the coordinate scale"""
    res_k, res_w = descartes_residuals(coords)
    return abs(res_k) <= tol and res_w <= max(tol, ALGEBRAIC_TOL * _scale(coords))

def _reflect_coords(coords: Sequence[Coords], i: int) -> Coords:
    others = [c for pos, c in enumerate(coords) if pos != i]
    a = 2 * (others[0][0] + others[1][0] + others[2][0]) - coords[i][0]
    b = 2 * (others[0][1] + others[1][1] + others[2][1]) - coords[i][1]
    c = 2 * (others[0][2] + others[1][2] + others[2][2]) - coords[i][2]
    return (a, b, c)

def _inversive_product(c1: GeneralizedCircle, c2: GeneralizedCircle) -> float:
    # -1 for tangent circles with disjoint interiors
    return (c1.b * c2.b.conjugate()).real - (c1.a * c2.c + c2.a * c1.c) / 2

@dataclass(frozen=True)
class DescartesQuadruple:
    """Four mutually tangent oriented circles with disjoint interiors

    The Descartes reflection acts linearly on the circle coordinates
    ``(a, b, c)``: curvature, minus curvature times center, co-curvature.
    Lines (curvature 0) need no special casing.
    """
    circles: Tuple[GeneralizedCircle, GeneralizedCircle, GeneralizedCircle, GeneralizedCircle]

    def __post_init__(self):
        circles = tuple(self.circles)
        if len(circles) != 4:
            raise ValueError(f"a Descartes quadruple has 4 circles, got {len(circles)}")
        object.__setattr__(self, "circles", circles)

    @classmethod
    def from_coords(cls, coords: Sequence[Coords]):
        return cls(tuple(GeneralizedCircle(a, b, c) for a, b, c in coords))

    @classmethod
    def from_curvatures(cls, k1: float, k2: float, k3: float, k4: float):
        """Place four mutually tangent circles from their signed curvatures

        The first circle is centred at 0, the second lies on the positive real
        axis and the third above it. Curvature 0 is not supported here.
        """
        ks = (float(k1), float(k2), float(k3), float(k4))
        if any(k == 0 for k in ks):
            raise DescartesViolation(
                f"from_curvatures() cannot place lines, got curvatures {ks}. " \
                "Give the circles explicitly instead"
            )
        if sum(1 for k in ks if k < 0) > 1:
            raise DescartesViolation(f"at most one circle may have negative curvature, got {ks}")

        res_k = sum(ks) ** 2 - 2 * sum(k * k for k in ks)
        if not math.isclose(res_k, 0.0, abs_tol=max(DESCARTES_TOL, ALGEBRAIC_TOL * max(ks) ** 2)):
            raise DescartesViolation(
                f"curvatures {ks} violate the Descartes relation " \
                f"(sum k)^2 = 2 sum k^2 (residual {res_k:g})"
            )

        # Distances between centers of tangent circles with signed curvatures
        def dist(ki, kj):
            return abs(1 / ki + 1 / kj)

        d12, d13, d23 = dist(ks[0], ks[1]), dist(ks[0], ks[2]), dist(ks[1], ks[2])
        w1 = 0j
        w2 = complex(ks[1] * d12)
        x3 = (d13 ** 2 - d23 ** 2 + d12 ** 2) / (2 * d12)
        y3 = math.sqrt(max(d13 ** 2 - x3 ** 2, 0.0))
        w3 = ks[2] * complex(x3, y3)

        # Complex Descartes theorem gives two candidates for the fourth circle
        root = 2 * cmath.sqrt(w1 * w2 + w2 * w3 + w3 * w1)
        base = w1 + w2 + w3
        best = None
        for w4 in (base + root, base - root):
            p4 = w4 / ks[3]
            err = sum(
                abs(abs(p4 - w / k) - dist(k, ks[3]))
                for w, k in ((w1, ks[0]), (w2, ks[1]), (w3, ks[2]))
            )
            rank = (round(err, 9), -p4.imag)
            if best is None or rank < best[0]:
                best = (rank, w4)

        ws = (w1, w2, w3, best[1])
        coords = [(k, -w, (abs(w) ** 2 - 1) / k) for k, w in zip(ks, ws)]
        quadruple = cls.from_coords(coords)
        quadruple.validate()
        return quadruple

    @classmethod
    def strip(cls):
        """Root ``(0, 0, 1, 1)``: lines ``Im z = 1`` and ``Im z = -1`` with unit circles at 0 and 2"""
        return cls.from_coords([(0.0, -1j, 2.0), (0.0, 1j, 2.0), (1.0, 0j, -1.0), (1.0, -2 + 0j, 3.0)])

    @property
    def curvatures(self) -> Tuple[float, ...]:
        return tuple(c.a for c in self.circles)

    @property
    def curvature_centers(self) -> Tuple[complex, ...]:
        return tuple(-c.b for c in self.circles)

    @property
    def co_curvatures(self) -> Tuple[float, ...]:
        return tuple(c.c for c in self.circles)

    def coords(self) -> Tuple[Coords, ...]:
        return tuple((c.a, c.b, c.c) for c in self.circles)

    def residuals(self):
        return descartes_residuals(self.coords())

    def satisfies_descartes(self, tol=DESCARTES_TOL) -> bool:
        return _satisfies(self.coords(), tol)

    def validate(self):
        """Raise :class:`DescartesViolation` unless both relations hold
        and the circles are pairwise tangent with disjoint interiors"""
        if not self.satisfies_descartes():
            res_k, res_w = self.residuals()
            raise DescartesViolation(
                f"quadruple with curvatures {self.curvatures} violates the Descartes " \
                f"relations (curvature residual {res_k:g}, center residual {res_w:g})"
            )

        if sum(1 for c in self.circles if c.a < -ALGEBRAIC_TOL) > 1:
            raise DescartesViolation("at most one circle of a quadruple may be negatively oriented")

        for i in range(4):
            for j in range(i + 1, 4):
                product = _inversive_product(self.circles[i], self.circles[j])
                if abs(product + 1) > max(TANGENCY_TOL, ALGEBRAIC_TOL * _scale(self.coords())):
                    raise DescartesViolation(
                        f"circles {i + 1} and {j + 1} of the quadruple are not tangent " \
                        f"with disjoint interiors (inversive product {product:g})"
                    )

    def reflect(self, i: int):
        return descartes_reflect(self, i)

def descartes_reflect(q: DescartesQuadruple, i: int) -> DescartesQuadruple:
    """Swap circle ``i`` (1..4) for the other circle tangent to the remaining three"""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"quadruple index must be 1..4, got {i}")

    coords = list(q.coords())
    coords[i - 1] = _reflect_coords(coords, i - 1)
    return DescartesQuadruple.from_coords(coords)

def _meets_box(circle: GeneralizedCircle, box) -> bool:
    if circle.is_line:
        return True
    xmin, xmax, ymin, ymax = box
    p = circle.center
    dx = max(xmin - p.real, 0.0, p.real - xmax)
    dy = max(ymin - p.imag, 0.0, p.imag - ymax)
    return math.hypot(dx, dy) < circle.radius

def apollonian_enumerate(
    root: DescartesQuadruple,
    T: float,
    window: Optional[Tuple[float, float, float, float]] = None,
) -> Packing:
    """All circles of the packing generated by ``root`` with curvature below ``T``

    Quadruples are expanded lowest-curvature-first through non-backtracking
    Descartes reflections. A reflection whose new circle reaches ``T`` is cut,
    since curvature only grows further down the tree. The four root circles are
    always kept.

    Packings containing a line are unbounded and need ``window``, a box
    ``(xmin, xmax, ymin, ymax)``; circles missing it are neither kept nor
    expanded.
    """
    if not T > 0:
        raise ValueError(f"curvature bound must be positive, got {T}")

    root.validate()
    if window is None and any(c.is_line for c in root.circles):
        raise ValueError("root contains a line, the packing is unbounded and needs a window")

    circles = []
    word_lens = []
    parents = []
    index = {}

    def add(circle, word_len, parent):
        key = circle_key(circle)
        pos = index.get(key)
        if pos is not None:
            return pos, False
        pos = len(circles)
        index[key] = pos
        circles.append(circle)
        word_lens.append(word_len)
        parents.append(parent)
        return pos, True

    positions = tuple(add(c, 0, -1)[0] for c in root.circles)
    seed_count = len(circles)

    quadruples = 0
    checked = 1
    violations = int(abs(_curvature_residual(root.coords())) > DESCARTES_TOL)
    counter = 0
    heap = [(0.0, counter, root.coords(), positions, -1, 0)]

    pb = pbm.get_circles_pb(recreate=True, desc="Apollonian")
    pending = 0

    while heap:
        _, _, quad, positions, last, depth = heapq.heappop(heap)
        quadruples += 1

        for i in range(4):
            if i == last:
                continue

            a, b, c = _reflect_coords(quad, i)
            child = quad[:i] + ((a, b, c),) + quad[i + 1:]
            checked += 1
            if abs(_curvature_residual(child)) > DESCARTES_TOL:
                violations += 1
            if abs(a) >= T:
                continue

            circle = GeneralizedCircle(a, b, c)
            if window is not None and not _meets_box(circle, window):
                continue

            pos, new = add(circle, depth + 1, positions[i])
            if new:
                pending += 1

            child_positions = positions[:i] + (pos,) + positions[i + 1:]
            counter += 1
            heapq.heappush(heap, (abs(a), counter, child, child_positions, i, depth + 1))

        if pending >= 1000:
            pb.update(pending)
            pending = 0

    pb.update(pending)
    pb.close()

    if violations:
        log.warning(f"{violations} of {checked} quadruples violate the Descartes relation")

    log.info(
        f"Enumerated {len(circles)} circles with curvature below {T:g} " \
        f"from {quadruples} quadruples"
    )

    source = {
        "type": "apollonian",
        "circles": [[c.a, c.b.real, c.b.imag, c.c] for c in root.circles],
        "tmax": T,
    }
    if window is not None:
        source["window"] = list(window)

    return Packing(
        circles,
        word_lens,
        parents,
        T,
        source=source,
        seed_count=seed_count,
        stats={
            "quadruples": quadruples,
            "quadruples_checked": checked,
            "descartes_violations": violations,
            "max_word_len": max(word_lens),
        },
    )
