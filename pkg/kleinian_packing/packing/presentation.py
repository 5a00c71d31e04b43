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
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .descartes import DescartesQuadruple
from ..errors import InvalidPresentation, SchottkyConfigurationError
from ..geometry import (
    GeneralizedCircle,
    INFINITY,
    MobiusMap,
    compose,
    inverse,
    is_infinity,
)
from ..tolerance import ALGEBRAIC_TOL, INVOLUTION_TOL, TANGENCY_TOL

__all__ = (
    "GroupPresentation", "Letter", "apollonian_dual_group", "schottky_build", "Disk"
)

log = logging.getLogger(__name__)

class Letter(NamedTuple):
    generator: int
    power: int
    map: MobiusMap

@dataclass(frozen=True)
class GroupPresentation:
    """Generators of a group acting on the Riemann sphere

    ``involutions[i]`` marks generators with ``g * g = identity``; those
    contribute a single letter to words, the others contribute ``g`` and
    ``g^-1``. Left as ``None`` the flags are detected.
    """
    generators: Tuple[MobiusMap, ...] = ()
    involutions: Optional[Tuple[bool, ...]] = None
    label: str = ""

    def __post_init__(self):
        generators = tuple(self.generators)
        for pos, g in enumerate(generators):
            if not isinstance(g, MobiusMap):
                raise InvalidPresentation(f"generator {pos} is not a MobiusMap ({g!r})")

        if self.involutions is None:
            involutions = tuple(g.is_involution() for g in generators)
        else:
            involutions = tuple(bool(f) for f in self.involutions)
            if len(involutions) != len(generators):
                raise InvalidPresentation(
                    f"{len(generators)} generators but {len(involutions)} involution flags"
                )

        for pos, (g, flag) in enumerate(zip(generators, involutions)):
            if flag and not g.is_involution(INVOLUTION_TOL):
                raise InvalidPresentation(
                    f"generator {pos} is flagged as an involution but g*g is not the identity"
                )

        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "involutions", involutions)

    def __len__(self):
        return len(self.generators)

    def letters(self) -> List[Letter]:
        """Alphabet for words: one letter per involution, two per other generator"""
        letters = []
        for pos, (g, flag) in enumerate(zip(self.generators, self.involutions)):
            letters.append(Letter(pos, 1, g))
            if not flag:
                letters.append(Letter(pos, -1, inverse(g)))
        return letters

    def inverse_letters(self) -> List[int]:
        """``inv[i]`` is the position of the letter cancelling letter ``i``"""
        letters = self.letters()
        lookup = {(l.generator, l.power): pos for pos, l in enumerate(letters)}
        inv = []
        for l in letters:
            if self.involutions[l.generator]:
                inv.append(lookup[(l.generator, 1)])
            else:
                inv.append(lookup[(l.generator, -l.power)])
        return inv

    def permuted(self, order: Sequence[int]):
        """Same group with generators reordered"""
        if sorted(order) != list(range(len(self.generators))):
            raise ValueError(f"{order} is not a permutation of the generators")
        return GroupPresentation(
            tuple(self.generators[i] for i in order),
            tuple(self.involutions[i] for i in order),
            self.label,
        )

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "generators": [
                {
                    "matrix": [[[e.real, e.imag] for e in row] for row in g.matrix],
                    "reflection": g.reflection,
                    "involution": flag,
                }
                for g, flag in zip(self.generators, self.involutions)
            ],
        }

def _tangency_point(c1: GeneralizedCircle, c2: GeneralizedCircle):
    # Weighted mean of curvature-centers; parallel lines meet at infinity
    k = c1.a + c2.a
    if abs(k) <= ALGEBRAIC_TOL:
        return INFINITY
    return -(c1.b + c2.b) / k

def _circle_through(p1, p2, p3) -> GeneralizedCircle:
    points = [p1, p2, p3]
    finite = [p for p in points if not is_infinity(p)]
    if len(finite) == 3:
        return GeneralizedCircle.through_points(*finite)
    if len(finite) != 2:
        raise InvalidPresentation("cannot fit a dual circle through these tangency points")

    z1, z2 = finite
    n = 1j * (z2 - z1) / abs(z2 - z1)
    return GeneralizedCircle.from_line(n, (n.conjugate() * z1).real)

def apollonian_dual_group(root: DescartesQuadruple) -> GroupPresentation:
    """Inversions in the four dual circles of ``root``

    Dual circle ``i`` passes through the three tangency points of the circles
    other than ``i``; it is orthogonal to them and inverting in it swaps circle
    ``i`` with its Descartes reflection.
    """
    root.validate()
    circles = root.circles
    generators = []
    for i in range(4):
        others = [circles[j] for j in range(4) if j != i]
        points = [
            _tangency_point(others[0], others[1]),
            _tangency_point(others[0], others[2]),
            _tangency_point(others[1], others[2]),
        ]
        dual = _circle_through(*points)
        log.debug(f"Dual circle {i + 1}: {dual}")
        generators.append(MobiusMap.inversion(dual))

    return GroupPresentation(tuple(generators), (True,) * 4, label="apollonian-dual")

# (center, radius) or a positively oriented bounded circle
Disk = Union[Tuple[complex, float], GeneralizedCircle]

def _as_center_radius(disk: Disk) -> Tuple[complex, float]:
    if isinstance(disk, GeneralizedCircle):
        if disk.is_line or disk.a < 0:
            raise SchottkyConfigurationError(f"{disk} does not bound a disk")
        return disk.center, disk.radius

    center, radius = disk
    center = complex(center)
    radius = float(radius)
    if not radius > 0:
        raise SchottkyConfigurationError(f"disk radius must be positive, got {radius}")
    return center, radius

def _mid_circle(d1, d2) -> GeneralizedCircle:
    """Circle (or line) whose inversion swaps the two disjoint disks"""
    (c1, r1), (c2, r2) = d1, d2
    if math.isclose(r1, r2, rel_tol=ALGEBRAIC_TOL):
        n = (c2 - c1) / abs(c2 - c1)
        return GeneralizedCircle.from_line(n, (n.conjugate() * (c1 + c2) / 2).real)

    # External centre of similitude
    e = (r2 * c1 - r1 * c2) / (r2 - r1)
    rho2 = abs(e - c1) * abs(e - c2) - r1 * r2
    return GeneralizedCircle.from_center_radius(e, math.sqrt(rho2))

def schottky_build(pairs: Sequence[Tuple[Disk, Disk]]):
    """Classical Schottky group pairing each disk ``D_i`` with ``D_i'``

    ``g_i`` is inversion in ``D_i`` followed by inversion in the mid-circle of
    the pair, so ``g_i`` maps the interior of ``D_i`` onto the exterior of
    ``D_i'`` and fixes the line through both centers. Returns the presentation
    and the ``2k`` boundary circles as seeds.
    """
    disks = []
    for pos, (d, d_prime) in enumerate(pairs):
        disks.append((pos, "D", _as_center_radius(d)))
        disks.append((pos, "D'", _as_center_radius(d_prime)))

    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            pi, ni, (ci, ri) = disks[i]
            pj, nj, (cj, rj) = disks[j]
            gap = abs(ci - cj) - ri - rj
            if gap <= TANGENCY_TOL:
                state = "touch" if abs(gap) <= TANGENCY_TOL else "overlap"
                raise SchottkyConfigurationError(
                    f"disks {ni}{pi + 1} and {nj}{pj + 1} {state} (gap {gap:g}); " \
                    "Schottky disks must be pairwise disjoint"
                )

    generators = []
    seeds = []
    for pos in range(len(disks) // 2):
        d = disks[2 * pos][2]
        d_prime = disks[2 * pos + 1][2]
        boundary = GeneralizedCircle.from_center_radius(*d)
        boundary_prime = GeneralizedCircle.from_center_radius(*d_prime)

        g = compose(
            MobiusMap.inversion(_mid_circle(d, d_prime)),
            MobiusMap.inversion(boundary),
        )
        generators.append(g)
        seeds.extend((boundary, boundary_prime))

    presentation = GroupPresentation(
        tuple(generators), (False,) * len(generators), label="schottky"
    )
    return presentation, seeds
