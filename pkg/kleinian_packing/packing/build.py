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

"""Packings described by plain data (config files, sidecars)

Three kinds are understood::

    {"type": "apollonian", "curvatures": [-1, 2, 2, 3]}
    {"type": "apollonian", "circles": [<circle>, <circle>, <circle>, <circle>]}
    {"type": "schottky", "pairs": [[[cx, cy, r], [cx, cy, r]], ...]}
    {"type": "generators", "generators": [<generator>, ...], "seeds": [<circle>, ...]}

A ``<circle>`` is ``{"curvature": k, "center": [x, y]}``,
``{"normal": [nx, ny], "offset": o}`` or the raw form ``[a, b_re, b_im, c]``.
A ``<generator>`` is ``{"matrix": [[a, b], [c, d]], "reflection": false}``
with complex entries written as ``[re, im]``, or ``{"inversion": <circle>}``.
Any kind takes an optional ``"window": [xmin, xmax, ymin, ymax]``.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from ..errors import ConfigError
from ..geometry import GeneralizedCircle, MobiusMap
from .descartes import DescartesQuadruple, apollonian_enumerate
from .orbit import orbit_enumerate
from .packing import Packing
from .presentation import GroupPresentation, apollonian_dual_group, schottky_build

__all__ = (
    "PackingSpec", "build_packing", "parse_circle", "parse_generator",
    "DEFAULT_MAX_WORD_LEN", "PACKING_KINDS"
)

log = logging.getLogger(__name__)

PACKING_KINDS = ("apollonian", "schottky", "generators")

# Word length cap for orbit-enumerated packings
DEFAULT_MAX_WORD_LEN = 40

def _complex(value, name) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    try:
        re, im = value
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise ConfigError(f"'{name}' must be a number or a pair [re, im], got {value!r}") from None

def _number(value, name) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"'{name}' must be a number, got {value!r}") from None

def parse_circle(data, name="circle") -> GeneralizedCircle:
    if isinstance(data, (list, tuple)):
        if len(data) != 4:
            raise ConfigError(f"{name}: raw circle must be [a, b_re, b_im, c], got {data!r}")
        a, b_re, b_im, c = (_number(x, name) for x in data)
        try:
            return GeneralizedCircle(a, complex(b_re, b_im), c)
        except ValueError as e:
            raise ConfigError(f"{name}: {e}") from None

    if not isinstance(data, dict):
        raise ConfigError(f"{name}: expected an object or a list, got {data!r}")

    try:
        if "curvature" in data:
            return GeneralizedCircle.from_curvature_center(
                _number(data["curvature"], f"{name}.curvature"), _complex(data["center"], f"{name}.center")
            )
        if "normal" in data:
            return GeneralizedCircle.from_line(
                _complex(data["normal"], f"{name}.normal"), _number(data["offset"], f"{name}.offset")
            )
    except KeyError as e:
        raise ConfigError(f"{name}: missing key {e}") from None
    except ValueError as e:
        raise ConfigError(f"{name}: {e}") from None

    raise ConfigError(f"{name}: expected 'curvature' and 'center', or 'normal' and 'offset'")

def parse_generator(data, name="generator") -> MobiusMap:
    if not isinstance(data, dict):
        raise ConfigError(f"{name}: expected an object, got {data!r}")

    if "inversion" in data:
        return MobiusMap.inversion(parse_circle(data["inversion"], f"{name}.inversion"))

    if "matrix" not in data:
        raise ConfigError(f"{name}: expected 'matrix' or 'inversion'")
    try:
        (a, b), (c, d) = data["matrix"]
    except (TypeError, ValueError):
        raise ConfigError(f"{name}.matrix must be [[a, b], [c, d]], got {data['matrix']!r}") from None
    entries = [_complex(x, f"{name}.matrix") for x in (a, b, c, d)]
    try:
        return MobiusMap.from_matrix(
            (entries[:2], entries[2:]), bool(data.get("reflection", False))
        )
    except ValueError as e:
        raise ConfigError(f"{name}: {e}") from None

def _window(value) -> Optional[Tuple[float, float, float, float]]:
    if value is None:
        return None
    try:
        xmin, xmax, ymin, ymax = (float(x) for x in value)
    except (TypeError, ValueError):
        raise ConfigError(f"'window' must be [xmin, xmax, ymin, ymax], got {value!r}") from None
    if not (xmin < xmax and ymin < ymax):
        raise ConfigError(f"'window' {value!r} is empty")
    return (xmin, xmax, ymin, ymax)

@dataclass(frozen=True)
class PackingSpec:
    kind: str
    root: Optional[DescartesQuadruple] = None
    presentation: Optional[GroupPresentation] = None
    seeds: Tuple[GeneralizedCircle, ...] = ()
    window: Optional[Tuple[float, float, float, float]] = None
    data: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_dict(cls, data: dict):
        """Validate and build; Descartes and Schottky problems raise their own errors"""
        if not isinstance(data, dict):
            raise ConfigError(f"packing must be an object, got {data!r}")

        kind = data.get("type")
        window = _window(data.get("window"))
        if kind == "apollonian":
            if "curvatures" in data:
                ks = data["curvatures"]
                if not isinstance(ks, (list, tuple)) or len(ks) != 4:
                    raise ConfigError(f"'curvatures' must list 4 numbers, got {ks!r}")
                ks = [_number(k, "curvatures") for k in ks]
                if sorted(ks) == [0, 0, 1, 1]:
                    root = DescartesQuadruple.strip()
                else:
                    root = DescartesQuadruple.from_curvatures(*ks)
            elif "circles" in data:
                circles = data["circles"]
                if not isinstance(circles, (list, tuple)) or len(circles) != 4:
                    raise ConfigError("'circles' must list 4 circles")
                root = DescartesQuadruple(
                    tuple(parse_circle(c, f"circles[{i}]") for i, c in enumerate(circles))
                )
                root.validate()
            else:
                raise ConfigError("apollonian packing needs 'curvatures' or 'circles'")

            if window is None and any(c.is_line for c in root.circles):
                window = (-1.0, 9.0, -1.0, 1.0)
                log.warning(f"Packing contains a line, enumerating inside the default window {window}")
            return cls(kind, root=root, window=window, data=dict(data))

        elif kind == "schottky":
            pairs = data.get("pairs")
            if not isinstance(pairs, (list, tuple)) or not pairs:
                raise ConfigError("schottky packing needs a nonempty list 'pairs'")
            disks = []
            for i, pair in enumerate(pairs):
                try:
                    (x1, y1, r1), (x2, y2, r2) = pair
                except (TypeError, ValueError):
                    raise ConfigError(f"pairs[{i}] must be [[cx, cy, r], [cx, cy, r]], got {pair!r}") from None
                disks.append((
                    (complex(_number(x1, "cx"), _number(y1, "cy")), _number(r1, "r")),
                    (complex(_number(x2, "cx"), _number(y2, "cy")), _number(r2, "r")),
                ))
            presentation, seeds = schottky_build(disks)
            return cls(kind, presentation=presentation, seeds=tuple(seeds), window=window, data=dict(data))

        elif kind == "generators":
            gens = data.get("generators")
            seeds = data.get("seeds")
            if not isinstance(gens, (list, tuple)) or not gens:
                raise ConfigError("generators packing needs a nonempty list 'generators'")
            if not isinstance(seeds, (list, tuple)) or not seeds:
                raise ConfigError("generators packing needs a nonempty list 'seeds'")
            presentation = GroupPresentation(
                tuple(parse_generator(g, f"generators[{i}]") for i, g in enumerate(gens)),
                label=str(data.get("label", "generators")),
            )
            seeds = tuple(parse_circle(c, f"seeds[{i}]") for i, c in enumerate(seeds))
            return cls(kind, presentation=presentation, seeds=seeds, window=window, data=dict(data))

        raise ConfigError(f"unknown packing type {kind!r}, must be one of {PACKING_KINDS}")

    def group(self) -> GroupPresentation:
        """The group acting on the packing (dual-circle inversions for Apollonian roots)"""
        if self.kind == "apollonian":
            return apollonian_dual_group(self.root)
        return self.presentation

    def to_dict(self) -> dict:
        return dict(self.data)

def build_packing(
    spec: PackingSpec,
    T: float,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
    prune: bool = True,
    patience: int = 2,
    workers: int = 1,
) -> Packing:
    """Enumerate ``spec`` to curvature ``T``"""
    if spec.kind == "apollonian":
        return apollonian_enumerate(spec.root, T, spec.window)

    return orbit_enumerate(
        spec.presentation,
        spec.seeds,
        T,
        max_word_len,
        prune=prune,
        patience=patience,
        workers=workers,
        window=spec.window,
    )
