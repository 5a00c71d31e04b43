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
Möbius transformations of the Riemann sphere

A :class:`MobiusMap` is a 2x2 complex matrix normalized to determinant one,
acting by ``z -> (az + b) / (cz + d)``. Maps with ``reflection=True`` act on the
complex conjugate first (``z -> M(conj(z))``); those are the circle inversions
used to present reflection groups such as the dual Apollonian group.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Union

from ..tolerance import ALGEBRAIC_TOL, ELEMENT_GRID, INVOLUTION_TOL

__all__ = (
    "INFINITY", "is_infinity", "ExtendedComplex", "MobiusMap",
    "compose", "inverse", "apply_boundary", "identity"
)

class _Infinity:
    """The point at infinity of the Riemann sphere"""
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())

INFINITY = _Infinity()

ExtendedComplex = Union[complex, _Infinity]

def is_infinity(z) -> bool:
    return z is INFINITY

def _is_zero(value: complex, scale: float) -> bool:
    return abs(value) <= ALGEBRAIC_TOL * scale

def _canonical_sign(entries):
    """Flip the matrix so the first nonzero entry has nonnegative real part
    (nonnegative imaginary part when the real part vanishes)"""
    scale = max(abs(e) for e in entries)
    for entry in entries:
        if _is_zero(entry, scale):
            continue

        if not _is_zero(entry.real, scale):
            negative = entry.real < 0
        else:
            negative = entry.imag < 0

        if negative:
            return tuple(-e for e in entries)
        return entries

    return entries

@dataclass(frozen=True)
class MobiusMap:
    a: complex
    b: complex
    c: complex
    d: complex
    reflection: bool = False

    def __post_init__(self):
        a, b, c, d = (complex(x) for x in (self.a, self.b, self.c, self.d))
        det = a * d - b * c
        if det == 0:
            raise ValueError(f"Singular matrix {[[a, b], [c, d]]} is not a Möbius transformation")

        if det != 1:
            s = cmath.sqrt(det)
            a, b, c, d = a / s, b / s, c / s, d / s

        a, b, c, d = _canonical_sign((a, b, c, d))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "reflection", bool(self.reflection))

    # Constructors

    @classmethod
    def from_matrix(cls, matrix, reflection=False):
        (a, b), (c, d) = matrix
        return cls(a, b, c, d, reflection)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, t: float):
        """``a_t``: translation by ``t`` along the vertical geodesic through j"""
        return cls(math.exp(t / 2), 0, 0, math.exp(-t / 2))

    @classmethod
    def translation(cls, z: complex):
        """``n_z``: z' = z' + z"""
        return cls(1, z, 0, 1)

    @classmethod
    def lower_unipotent(cls, z: complex):
        """``n_z^-``"""
        return cls(1, 0, z, 1)

    @classmethod
    def rotation(cls, theta: float):
        """Rotation by ``2 * theta`` about the origin, fixing the geodesic through j"""
        u = cmath.exp(1j * theta)
        return cls(u, 0, 0, 1 / u)

    @classmethod
    def scaling(cls, lam: float, p: complex = 0j):
        """``g0 = n_p a_{log lam}``, i.e. ``z -> lam * z + p``"""
        if lam <= 0:
            raise ValueError(f"scaling factor must be positive, got {lam}")
        return compose(cls.translation(p), cls.diagonal(math.log(lam)))

    @classmethod
    def inversion(cls, circle):
        """Reflection (inversion) in a generalized circle"""
        # [[-b, -c], [a, conj(b)]] has determinant -1 for a normalized circle
        return cls(-1j * circle.b, -1j * circle.c, 1j * circle.a, 1j * circle.b.conjugate(), True)

    # Matrix helpers

    @property
    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def trace(self) -> complex:
        return self.a + self.d

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, z):
        return apply_boundary(self, z)

    def is_identity(self, tol=INVOLUTION_TOL) -> bool:
        # Determinant one and canonical sign leave exactly one candidate
        return (
            not self.reflection
            and abs(self.a - 1) <= tol and abs(self.d - 1) <= tol
            and abs(self.b) <= tol and abs(self.c) <= tol
        )

    def is_involution(self, tol=INVOLUTION_TOL) -> bool:
        return compose(self, self).is_identity(tol)

    def isclose(self, other, tol=ALGEBRAIC_TOL) -> bool:
        if self.reflection != other.reflection:
            return False
        mine = (self.a, self.b, self.c, self.d)
        theirs = (other.a, other.b, other.c, other.d)
        same = all(abs(x - y) <= tol for x, y in zip(mine, theirs))
        opposite = all(abs(x + y) <= tol for x, y in zip(mine, theirs))
        return same or opposite

    def canonical_key(self, grid=ELEMENT_GRID):
        """Hashable key of the group element, stable under rounding noise below ``grid``"""
        key = []
        for entry in (self.a, self.b, self.c, self.d):
            key.append(round(entry.real / grid))
            key.append(round(entry.imag / grid))
        key.append(self.reflection)
        return tuple(key)

def identity() -> MobiusMap:
    return MobiusMap.identity()

def compose(g1: MobiusMap, g2: MobiusMap) -> MobiusMap:
    """Return ``g1 o g2`` (apply ``g2`` first)"""
    a2, b2, c2, d2 = g2.a, g2.b, g2.c, g2.d
    if g1.reflection:
        a2, b2, c2, d2 = a2.conjugate(), b2.conjugate(), c2.conjugate(), d2.conjugate()

    return MobiusMap(
        g1.a * a2 + g1.b * c2,
        g1.a * b2 + g1.b * d2,
        g1.c * a2 + g1.d * c2,
        g1.c * b2 + g1.d * d2,
        g1.reflection != g2.reflection
    )

def inverse(g: MobiusMap) -> MobiusMap:
    """Inverse through the adjugate"""
    a, b, c, d = g.d, -g.b, -g.c, g.a
    if g.reflection:
        a, b, c, d = a.conjugate(), b.conjugate(), c.conjugate(), d.conjugate()
    return MobiusMap(a, b, c, d, g.reflection)

def apply_boundary(g: MobiusMap, z: ExtendedComplex) -> ExtendedComplex:
    """Action of ``g`` on the Riemann sphere"""
    if is_infinity(z):
        if g.c == 0:
            return INFINITY
        # conj(inf) = inf, so reflection does not matter here
        return g.a / g.c

    z = complex(z)
    if g.reflection:
        z = z.conjugate()

    denom = g.c * z + g.d
    if denom == 0:
        return INFINITY

    return (g.a * z + g.b) / denom
