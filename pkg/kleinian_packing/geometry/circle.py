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

"""
Generalized circles (circles and lines) in inversive coordinates

A circle is the locus ``a|z|^2 + conj(b) z + b conj(z) + c = 0`` with the scale
fixed by ``|b|^2 - ac = 1``. The sign of ``a`` is the orientation: the interior
is where the defining form is negative, so ``a > 0`` bounds a disk and ``a < 0``
bounds the exterior of a disk (the outer circle of a bounded packing).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .mobius import MobiusMap, is_infinity
from ..tolerance import DEDUP_GRID, LINE_EPS, NORMALIZED_TOL

__all__ = (
    "GeneralizedCircle", "CircleGeometry", "circle_transform", "circle_geometry", "C0"
)

class CircleGeometry(NamedTuple):
    kind: str
    center: Optional[complex]
    radius: float
    curvature: float
    normal: Optional[complex]
    offset: Optional[float]

@dataclass(frozen=True)
class GeneralizedCircle:
    a: float
    b: complex
    c: float

    def __post_init__(self):
        a, b, c = float(self.a), complex(self.b), float(self.c)
        bb = b.real * b.real + b.imag * b.imag
        disc = bb - a * c

        # Already normalized up to rounding (Mobius images, Descartes reflections)
        if abs(disc - 1) > NORMALIZED_TOL * max(bb + abs(a * c), 1.0):
            if not disc > 0:
                raise ValueError(f"({a}, {b}, {c}) does not describe a real circle (discriminant {disc})")
            s = math.sqrt(disc)
            a, b, c = a / s, b / s, c / s

        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    # Constructors

    @classmethod
    def from_center_radius(cls, center: complex, radius: float, orientation: int = 1):
        if not radius > 0:
            raise ValueError(f"radius must be positive, got {radius}")
        center = complex(center)
        o = 1 if orientation >= 0 else -1
        return cls(
            o / radius,
            -o * center / radius,
            o * (abs(center) ** 2 - radius * radius) / radius
        )

    @classmethod
    def from_curvature_center(cls, curvature: float, center: complex):
        """Circle with signed curvature (negative = interior is the outside)"""
        if curvature == 0:
            raise ValueError("use from_line() for curvature 0")
        return cls.from_center_radius(center, 1 / abs(curvature), 1 if curvature > 0 else -1)

    @classmethod
    def from_line(cls, normal: complex, offset: float):
        """Line ``Re(conj(n) z) = offset``; the interior is the side ``Re(conj(n) z) < offset``"""
        normal = complex(normal)
        if normal == 0:
            raise ValueError("line normal must be nonzero")
        n = normal / abs(normal)
        return cls(0.0, n, -2.0 * offset)

    @classmethod
    def unit_circle(cls):
        return cls(1.0, 0j, -1.0)

    @classmethod
    def through_points(cls, z1: complex, z2: complex, z3: complex):
        """Circle (or line) through three distinct points, positively oriented"""
        rows = []
        for z in (z1, z2, z3):
            z = complex(z)
            rows.append([abs(z) ** 2, 2 * z.real, 2 * z.imag, 1.0])
        # Null vector of the 3x4 system in (a, Re b, Im b, c)
        _, _, vh = np.linalg.svd(np.array(rows))
        a, bx, by, c = vh[-1]
        if abs(a) <= LINE_EPS * max(abs(bx), abs(by), abs(c)):
            a = 0.0
        elif a < 0:
            a, bx, by, c = -a, -bx, -by, -c
        return cls(a, complex(bx, by), c)

    # Geometry

    @property
    def is_line(self) -> bool:
        return abs(self.a) <= LINE_EPS

    @property
    def curvature(self) -> float:
        return 0.0 if self.is_line else abs(self.a)

    @property
    def signed_curvature(self) -> float:
        return 0.0 if self.is_line else self.a

    @property
    def center(self) -> Optional[complex]:
        return None if self.is_line else -self.b / self.a

    @property
    def radius(self) -> float:
        return math.inf if self.is_line else 1 / abs(self.a)

    @property
    def normal(self) -> Optional[complex]:
        return self.b / abs(self.b) if self.is_line else None

    @property
    def offset(self) -> Optional[float]:
        return -self.c / (2 * abs(self.b)) if self.is_line else None

    def evaluate(self, z: complex) -> float:
        """Value of the defining form; negative inside, zero on the circle"""
        if is_infinity(z):
            return math.copysign(math.inf, self.a) if self.a != 0 else 0.0
        z = complex(z)
        return self.a * abs(z) ** 2 + 2 * (self.b.conjugate() * z).real + self.c

    def contains_point(self, z: complex) -> bool:
        return self.evaluate(z) < 0

    def reversed(self):
        return GeneralizedCircle(-self.a, -self.b, -self.c)

    def canonical_key(self, grid=DEDUP_GRID):
        return (
            round(self.a / grid),
            round(self.b.real / grid),
            round(self.b.imag / grid),
            round(self.c / grid),
        )

# Unit circle centred at the origin
C0 = GeneralizedCircle.unit_circle()

def circle_geometry(circle: GeneralizedCircle) -> CircleGeometry:
    if circle.is_line:
        return CircleGeometry("line", None, math.inf, 0.0, circle.normal, circle.offset)

    return CircleGeometry("circle", circle.center, circle.radius, circle.curvature, None, None)

def circle_transform(g: MobiusMap, circle: GeneralizedCircle) -> GeneralizedCircle:
    """Image of ``circle`` under ``g``

    The Hermitian matrix H = [[a, b], [conj(b), c]] goes to N* H N with N = g^-1,
    so interiors go to interiors. The discriminant is invariant.
    """
    a, b, c = circle.a, circle.b, circle.c
    if g.reflection:
        b = b.conjugate()

    # N = adj(g), determinant one
    n11, n12, n21, n22 = g.d, -g.b, -g.c, g.a

    a_new = a * abs(n11) ** 2 + 2 * (n11.conjugate() * b * n21).real + c * abs(n21) ** 2
    c_new = a * abs(n12) ** 2 + 2 * (n12.conjugate() * b * n22).real + c * abs(n22) ** 2
    b_new = (
        n11.conjugate() * (a * n12 + b * n22)
        + n21.conjugate() * (b.conjugate() * n12 + c * n22)
    )

    return GeneralizedCircle(a_new, b_new, c_new)
