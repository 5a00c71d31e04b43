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
Upper half-space model of hyperbolic 3-space

Points are ``z + r j`` with ``r > 0``; Möbius maps act through the Poincaré
extension.
"""

import math
from dataclasses import dataclass

from .mobius import MobiusMap, is_infinity, ExtendedComplex

__all__ = ("UHPoint", "J", "apply_h3", "hyp_dist", "busemann", "cosh_dist")

@dataclass(frozen=True)
class UHPoint:
    z: complex
    r: float

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "r", float(self.r))
        if not self.r > 0:
            raise ValueError(f"height must be positive, got {self.r}")

# Base point j = (0, 1)
J = UHPoint(0j, 1.0)

def apply_h3(g: MobiusMap, x: UHPoint) -> UHPoint:
    z = x.z.conjugate() if g.reflection else x.z
    r2 = x.r * x.r

    cz_d = g.c * z + g.d
    denom = abs(cz_d) ** 2 + abs(g.c) ** 2 * r2
    z_new = ((g.a * z + g.b) * cz_d.conjugate() + g.a * g.c.conjugate() * r2) / denom

    return UHPoint(z_new, x.r / denom)

def cosh_dist(x1: UHPoint, x2: UHPoint) -> float:
    return (abs(x1.z - x2.z) ** 2 + x1.r ** 2 + x2.r ** 2) / (2 * x1.r * x2.r)

def hyp_dist(x1: UHPoint, x2: UHPoint) -> float:
    # cosh(d) - 1 = 2 sinh(d/2)^2, which keeps precision for nearby points
    num = abs(x1.z - x2.z) ** 2 + (x1.r - x2.r) ** 2
    return 2 * math.asinh(math.sqrt(num / (4 * x1.r * x2.r)))

def _horo_log(zeta: complex, x: UHPoint) -> float:
    return math.log((abs(zeta - x.z) ** 2 + x.r ** 2) / x.r)

def busemann(zeta: ExtendedComplex, x: UHPoint, y: UHPoint) -> float:
    """Busemann cocycle ``beta_zeta(x, y)``

    Limit of ``d(x, xi_t) - d(y, xi_t)`` along a geodesic ray ``xi_t`` tending to ``zeta``.
    """
    if is_infinity(zeta):
        return math.log(y.r / x.r)

    zeta = complex(zeta)
    return _horo_log(zeta, x) - _horo_log(zeta, y)
