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

"""Planar regions for counting circles

Every region answers, vectorised over arrays of centers ``p`` and radii ``r``:

* ``contains(p)``: the point lies in the (closed) region
* ``disk_meets(p, r)``: the open disk ``B(p, r)`` meets the region
* ``disk_inside(p, r)``: the closed disk lies in the region
* ``annulus_meets(p, r_in, r_out)``: some point at distance in
  ``[r_in, r_out)`` from ``p`` lies in the region

Primitives answer exactly. Unions, intersections and complements are
evaluated structurally from their parts, which is exact for
``disk_meets`` of unions and ``disk_inside`` of intersections and an
approximation otherwise.
"""

import math
from typing import Optional, Tuple

import numpy as np

from ..errors import InvalidRegion
from ..geometry import GeneralizedCircle

__all__ = (
    "Region", "Rectangle", "Disk", "HalfPlane", "Sector",
    "Union", "Intersection", "Complement", "region_from_dict"
)

Box = Tuple[float, float, float, float]

def _as_array(p):
    return np.asarray(p, dtype=complex)

def _line_range(line: GeneralizedCircle, points, arcs=()):
    """Min and max of the signed line function over ``points`` and disk arcs"""
    n = line.normal
    values = [(n.conjugate() * complex(z)).real - line.offset for z in points]
    for center, radius in arcs:
        s = (n.conjugate() * complex(center)).real - line.offset
        values.extend((s - radius, s + radius))
    return min(values), max(values)

class Region:
    """Base class of all regions"""
    kind = None

    def contains(self, p) -> np.ndarray:
        raise NotImplementedError

    def disk_meets(self, p, r) -> np.ndarray:
        raise NotImplementedError

    def disk_inside(self, p, r) -> np.ndarray:
        raise NotImplementedError

    def annulus_meets(self, p, r_in, r_out) -> np.ndarray:
        raise NotImplementedError

    def line_meets(self, line: GeneralizedCircle) -> bool:
        raise NotImplementedError

    def line_inside(self, line: GeneralizedCircle) -> bool:
        return False

    def bounding_box(self) -> Optional[Box]:
        raise NotImplementedError

    def scaled(self, lam: float, p: complex = 0j):
        """Image under ``z -> lam * z + p``"""
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    @property
    def is_bounded(self) -> bool:
        return self.bounding_box() is not None

    def __or__(self, other):
        return Union(self, other)

    def __and__(self, other):
        return Intersection(self, other)

    def __invert__(self):
        return Complement(self)

    def __eq__(self, other):
        return isinstance(other, Region) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(repr(self.to_dict()))

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.to_dict()}>"

class Rectangle(Region):
    kind = "rectangle"

    def __init__(self, xmin, xmax, ymin, ymax):
        self.xmin, self.xmax = float(xmin), float(xmax)
        self.ymin, self.ymax = float(ymin), float(ymax)
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise InvalidRegion(f"rectangle needs xmin < xmax and ymin < ymax, got {self.to_dict()}")

    @classmethod
    def from_corners(cls, z1: complex, z2: complex):
        z1, z2 = complex(z1), complex(z2)
        return cls(
            min(z1.real, z2.real), max(z1.real, z2.real),
            min(z1.imag, z2.imag), max(z1.imag, z2.imag)
        )

    def _distance(self, p):
        p = _as_array(p)
        dx = np.maximum.reduce([self.xmin - p.real, np.zeros(p.shape), p.real - self.xmax])
        dy = np.maximum.reduce([self.ymin - p.imag, np.zeros(p.shape), p.imag - self.ymax])
        return np.hypot(dx, dy)

    def _max_distance(self, p):
        p = _as_array(p)
        dx = np.maximum(np.abs(p.real - self.xmin), np.abs(p.real - self.xmax))
        dy = np.maximum(np.abs(p.imag - self.ymin), np.abs(p.imag - self.ymax))
        return np.hypot(dx, dy)

    def contains(self, p):
        p = _as_array(p)
        return (
            (p.real >= self.xmin) & (p.real <= self.xmax)
            & (p.imag >= self.ymin) & (p.imag <= self.ymax)
        )

    def disk_meets(self, p, r):
        return self._distance(p) < r

    def disk_inside(self, p, r):
        p = _as_array(p)
        return (
            (p.real - r >= self.xmin) & (p.real + r <= self.xmax)
            & (p.imag - r >= self.ymin) & (p.imag + r <= self.ymax)
        )

    def annulus_meets(self, p, r_in, r_out):
        return (self._distance(p) < r_out) & (self._max_distance(p) >= r_in)

    def corners(self):
        return [
            complex(self.xmin, self.ymin), complex(self.xmax, self.ymin),
            complex(self.xmax, self.ymax), complex(self.xmin, self.ymax),
        ]

    def line_meets(self, line):
        lo, hi = _line_range(line, self.corners())
        return lo <= 0 <= hi

    def bounding_box(self):
        return (self.xmin, self.xmax, self.ymin, self.ymax)

    def scaled(self, lam, p=0j):
        p = complex(p)
        return Rectangle(
            lam * self.xmin + p.real, lam * self.xmax + p.real,
            lam * self.ymin + p.imag, lam * self.ymax + p.imag
        )

    def to_dict(self):
        return {"type": self.kind, "xmin": self.xmin, "xmax": self.xmax, "ymin": self.ymin, "ymax": self.ymax}

class Disk(Region):
    kind = "disk"

    def __init__(self, center, radius):
        self.center = complex(center)
        self.radius = float(radius)
        if not self.radius > 0:
            raise InvalidRegion(f"disk radius must be positive, got {radius}")

    def contains(self, p):
        return np.abs(_as_array(p) - self.center) <= self.radius

    def disk_meets(self, p, r):
        return np.abs(_as_array(p) - self.center) - self.radius < r

    def disk_inside(self, p, r):
        return np.abs(_as_array(p) - self.center) + r <= self.radius

    def annulus_meets(self, p, r_in, r_out):
        d = np.abs(_as_array(p) - self.center)
        return (d - self.radius < r_out) & (d + self.radius >= r_in)

    def line_meets(self, line):
        lo, hi = _line_range(line, (), [(self.center, self.radius)])
        return lo <= 0 <= hi

    def bounding_box(self):
        c, r = self.center, self.radius
        return (c.real - r, c.real + r, c.imag - r, c.imag + r)

    def scaled(self, lam, p=0j):
        return Disk(lam * self.center + complex(p), lam * self.radius)

    def to_dict(self):
        return {"type": self.kind, "center": [self.center.real, self.center.imag], "radius": self.radius}

class HalfPlane(Region):
    """Points with ``Re(conj(normal) * z) <= offset``"""
    kind = "halfplane"

    def __init__(self, normal, offset):
        normal = complex(normal)
        if normal == 0:
            raise InvalidRegion("halfplane normal must be nonzero")
        self.normal = normal / abs(normal)
        self.offset = float(offset)

    def _signed(self, p):
        return (self.normal.conjugate() * _as_array(p)).real - self.offset

    def contains(self, p):
        return self._signed(p) <= 0

    def disk_meets(self, p, r):
        return self._signed(p) < r

    def disk_inside(self, p, r):
        return self._signed(p) + r <= 0

    def annulus_meets(self, p, r_in, r_out):
        # Unbounded, so far points always exist
        return self._signed(p) < r_out

    def _parallel(self, line):
        return abs((self.normal.conjugate() * line.normal).imag) <= 1e-15

    def line_meets(self, line):
        if not self._parallel(line):
            return True
        # Any point of the line decides for a parallel line
        point = line.normal * line.offset
        return bool(self._signed(point) <= 0)

    def line_inside(self, line):
        return self._parallel(line) and bool(self._signed(line.normal * line.offset) <= 0)

    def bounding_box(self):
        return None

    def scaled(self, lam, p=0j):
        # n.z <= o  becomes  n.(w - p)/lam <= o
        return HalfPlane(self.normal, lam * self.offset + (self.normal.conjugate() * complex(p)).real)

    def to_dict(self):
        return {"type": self.kind, "normal": [self.normal.real, self.normal.imag], "offset": self.offset}

class Sector(Region):
    """Wedge of a disk between angles ``theta0`` and ``theta1`` (span at most pi)"""
    kind = "sector"

    def __init__(self, center, radius, theta0, theta1):
        self.center = complex(center)
        self.radius = float(radius)
        self.theta0 = float(theta0)
        self.theta1 = float(theta1)
        if not self.radius > 0:
            raise InvalidRegion(f"sector radius must be positive, got {radius}")
        span = self.theta1 - self.theta0
        if not 0 < span <= math.pi:
            raise InvalidRegion(f"sector span must be in (0, pi], got {span}")

        # Inward normals of the two bounding rays
        self._u0 = complex(math.cos(self.theta0), math.sin(self.theta0))
        self._u1 = complex(math.cos(self.theta1), math.sin(self.theta1))
        self._n0 = 1j * self._u0
        self._n1 = -1j * self._u1

    def _angular(self, v):
        # Inside the wedge iff on the inner side of both bounding lines
        a0 = (self._n0.conjugate() * v).real
        a1 = (self._n1.conjugate() * v).real
        return a0, a1

    def contains(self, p):
        v = _as_array(p) - self.center
        a0, a1 = self._angular(v)
        return (np.abs(v) <= self.radius) & (a0 >= 0) & (a1 >= 0)

    def _segment_distance(self, v, u):
        t = np.clip((u.conjugate() * v).real, 0.0, self.radius)
        return np.abs(v - t * u)

    def _distance(self, p):
        v = _as_array(p) - self.center
        a0, a1 = self._angular(v)
        in_wedge = (a0 >= 0) & (a1 >= 0)
        arc = np.maximum(np.abs(v) - self.radius, 0.0)
        edges = np.minimum(self._segment_distance(v, self._u0), self._segment_distance(v, self._u1))
        return np.where(in_wedge, arc, edges)

    def _max_distance(self, p):
        v = _as_array(p) - self.center
        ends = [np.abs(v), np.abs(v - self.radius * self._u0), np.abs(v - self.radius * self._u1)]
        # The farthest arc point lies opposite to v when that direction is in the wedge
        safe = np.where(np.abs(v) > 0, v, 1.0)
        opposite = -safe / np.abs(safe)
        b0, b1 = self._angular(opposite)
        far = np.where((b0 >= 0) & (b1 >= 0), np.abs(v) + self.radius, 0.0)
        return np.maximum.reduce(ends + [far])

    def disk_meets(self, p, r):
        return self._distance(p) < r

    def disk_inside(self, p, r):
        v = _as_array(p) - self.center
        a0, a1 = self._angular(v)
        return (np.abs(v) + r <= self.radius) & (a0 >= r) & (a1 >= r)

    def annulus_meets(self, p, r_in, r_out):
        return (self._distance(p) < r_out) & (self._max_distance(p) >= r_in)

    def line_meets(self, line):
        points = [self.center, self.center + self.radius * self._u0, self.center + self.radius * self._u1]
        # Arc points extremal for the line function, when inside the wedge
        for direction in (line.normal, -line.normal):
            a0, a1 = self._angular(direction)
            if a0 >= 0 and a1 >= 0:
                points.append(self.center + self.radius * direction)
        lo, hi = _line_range(line, points)
        return lo <= 0 <= hi

    def bounding_box(self):
        c, r = self.center, self.radius
        return (c.real - r, c.real + r, c.imag - r, c.imag + r)

    def scaled(self, lam, p=0j):
        return Sector(lam * self.center + complex(p), lam * self.radius, self.theta0, self.theta1)

    def to_dict(self):
        return {
            "type": self.kind,
            "center": [self.center.real, self.center.imag],
            "radius": self.radius,
            "theta0": self.theta0,
            "theta1": self.theta1,
        }

class Union(Region):
    kind = "union"

    def __init__(self, *parts: Region):
        if len(parts) < 2:
            raise InvalidRegion("union needs at least two regions")
        self.parts = tuple(parts)

    def _any(self, method, *args):
        return np.logical_or.reduce([getattr(part, method)(*args) for part in self.parts])

    def contains(self, p):
        return self._any("contains", p)

    def disk_meets(self, p, r):
        return self._any("disk_meets", p, r)

    def disk_inside(self, p, r):
        return self._any("disk_inside", p, r)

    def annulus_meets(self, p, r_in, r_out):
        return self._any("annulus_meets", p, r_in, r_out)

    def line_meets(self, line):
        return any(part.line_meets(line) for part in self.parts)

    def line_inside(self, line):
        return any(part.line_inside(line) for part in self.parts)

    def bounding_box(self):
        boxes = [part.bounding_box() for part in self.parts]
        if any(box is None for box in boxes):
            return None
        return (
            min(b[0] for b in boxes), max(b[1] for b in boxes),
            min(b[2] for b in boxes), max(b[3] for b in boxes),
        )

    def scaled(self, lam, p=0j):
        return Union(*(part.scaled(lam, p) for part in self.parts))

    def to_dict(self):
        return {"type": self.kind, "parts": [part.to_dict() for part in self.parts]}

class Intersection(Region):
    kind = "intersection"

    def __init__(self, *parts: Region):
        if len(parts) < 2:
            raise InvalidRegion("intersection needs at least two regions")
        self.parts = tuple(parts)

    def _all(self, method, *args):
        return np.logical_and.reduce([getattr(part, method)(*args) for part in self.parts])

    def contains(self, p):
        return self._all("contains", p)

    def disk_meets(self, p, r):
        return self._all("disk_meets", p, r)

    def disk_inside(self, p, r):
        return self._all("disk_inside", p, r)

    def annulus_meets(self, p, r_in, r_out):
        return self._all("annulus_meets", p, r_in, r_out)

    def line_meets(self, line):
        return all(part.line_meets(line) for part in self.parts)

    def line_inside(self, line):
        return all(part.line_inside(line) for part in self.parts)

    def bounding_box(self):
        boxes = [box for box in (part.bounding_box() for part in self.parts) if box is not None]
        if not boxes:
            return None
        return (
            max(b[0] for b in boxes), min(b[1] for b in boxes),
            max(b[2] for b in boxes), min(b[3] for b in boxes),
        )

    def scaled(self, lam, p=0j):
        return Intersection(*(part.scaled(lam, p) for part in self.parts))

    def to_dict(self):
        return {"type": self.kind, "parts": [part.to_dict() for part in self.parts]}

class Complement(Region):
    kind = "complement"

    def __init__(self, part: Region):
        self.part = part

    def contains(self, p):
        return ~self.part.contains(p)

    def disk_meets(self, p, r):
        return ~self.part.disk_inside(p, r)

    def disk_inside(self, p, r):
        return ~self.part.disk_meets(p, r)

    def annulus_meets(self, p, r_in, r_out):
        return ~self.part.disk_inside(p, r_out)

    def line_meets(self, line):
        return not self.part.line_inside(line)

    def line_inside(self, line):
        return not self.part.line_meets(line)

    def bounding_box(self):
        return None

    def scaled(self, lam, p=0j):
        return Complement(self.part.scaled(lam, p))

    def to_dict(self):
        return {"type": self.kind, "part": self.part.to_dict()}

def _point(value, name):
    try:
        x, y = value
        return complex(float(x), float(y))
    except (TypeError, ValueError):
        raise InvalidRegion(f"'{name}' must be a pair [x, y], got {value!r}") from None

def region_from_dict(data: dict) -> Region:
    """Build a region from its JSON form"""
    if not isinstance(data, dict):
        raise InvalidRegion(f"region must be an object, got {data!r}")

    kind = data.get("type")
    try:
        if kind == "rectangle":
            if "corners" in data:
                z1, z2 = data["corners"]
                return Rectangle.from_corners(_point(z1, "corners"), _point(z2, "corners"))
            return Rectangle(data["xmin"], data["xmax"], data["ymin"], data["ymax"])
        elif kind == "disk":
            return Disk(_point(data["center"], "center"), data["radius"])
        elif kind == "halfplane":
            return HalfPlane(_point(data["normal"], "normal"), data["offset"])
        elif kind == "sector":
            return Sector(_point(data["center"], "center"), data["radius"], data["theta0"], data["theta1"])
        elif kind == "union":
            return Union(*(region_from_dict(part) for part in data["parts"]))
        elif kind == "intersection":
            return Intersection(*(region_from_dict(part) for part in data["parts"]))
        elif kind == "complement":
            return Complement(region_from_dict(data["part"]))
    except KeyError as e:
        raise InvalidRegion(f"region '{kind}' is missing key {e}") from None
    except (TypeError, ValueError) as e:
        raise InvalidRegion(f"region '{kind}' is malformed: {e}") from None

    raise InvalidRegion(
        f"unknown region type {kind!r}, available types are " \
        "rectangle, disk, halfplane, sector, union, intersection, complement"
    )

Region.from_dict = staticmethod(region_from_dict)
