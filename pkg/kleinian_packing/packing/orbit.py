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

"""Orbit enumeration of circles under a finitely generated group"""

import logging
import math
from functools import partial
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .packing import DedupIndex, Packing, circle_key
from .presentation import GroupPresentation
from ..geometry import GeneralizedCircle, circle_transform
from ..progress_bar import progress_bar_manager as pbm
from ..utils import WorkerPool, cap_workers

__all__ = ("orbit_enumerate",)

log = logging.getLogger(__name__)

class _Node(NamedTuple):
    # g(seed) for every seed, unnormalized orientation
    images: Tuple[GeneralizedCircle, ...]
    # Leftmost letter of g, -1 for the identity
    first: int
    misses: int
    image_keys: Tuple[tuple, ...]

class _Child(NamedTuple):
    images: Tuple[GeneralizedCircle, ...]
    first: int
    misses: int
    image_keys: Tuple[tuple, ...]
    cut: bool

def _meets_box(circle: GeneralizedCircle, box) -> bool:
    if circle.is_line:
        return True
    xmin, xmax, ymin, ymax = box
    p = circle.center
    dx = max(xmin - p.real, 0.0, p.real - xmax)
    dy = max(ymin - p.imag, 0.0, p.imag - ymax)
    return math.hypot(dx, dy) < circle.radius

def _oriented(circle: GeneralizedCircle) -> GeneralizedCircle:
    # Orbit images are stored with bounded interior
    if circle.is_line or circle.a > 0:
        return circle
    return circle.reversed()

def _frontier_order(node: _Node):
    return (min(img.curvature for img in node.images), node.image_keys, node.first)

class _Expander:
    """Expands frontier chunks; safe to run from several worker threads

    A word ``g`` is extended on the left: the images of ``s g`` are the images
    of ``g`` moved by the single letter ``s``, so no long products are formed.
    """
    def __init__(self, presentation, T, index, prune, patience, window):
        self.letters = presentation.letters()
        self.inverse_of = presentation.inverse_letters()
        self.T = T
        self.index = index
        self.prune = prune
        self.patience = patience
        self.window = window

    def expand(self, start: int, chunk: Sequence[_Node], level: int) -> List[_Child]:
        children = []
        for offset, node in enumerate(chunk):
            for pos, letter in enumerate(self.letters):
                if node.first >= 0 and pos == self.inverse_of[node.first]:
                    continue

                images = []
                keys = []
                any_new = False
                over = True
                for seed_pos, parent in enumerate(node.images):
                    image = circle_transform(letter.map, parent)
                    key = circle_key(image)
                    images.append(image)
                    keys.append(key)

                    # Keys from earlier levels are old; same-level keys count as
                    # new for every element reaching them
                    prior = self.index.level_of(key)
                    if prior is not None and prior < level:
                        continue
                    any_new = True

                    in_bound = image.is_line or image.curvature < self.T
                    if in_bound and self.window is not None:
                        in_bound = _meets_box(image, self.window)
                    if not in_bound:
                        continue

                    over = False
                    provenance = (start + offset, pos, seed_pos, node.image_keys[seed_pos], _oriented(image))
                    self.index.insert_if_absent(key, level, provenance)

                if not any_new:
                    over = True

                misses = node.misses + 1 if over else 0
                cut = self.prune and misses >= self.patience
                children.append(_Child(tuple(images), pos, misses, tuple(keys), cut))

        return children

def orbit_enumerate(
    presentation: GroupPresentation,
    seeds: Sequence[GeneralizedCircle],
    T: float,
    max_word_len: int,
    prune: bool = False,
    patience: int = 2,
    workers: int = 1,
    window: Optional[Tuple[float, float, float, float]] = None,
    chunk_size: int = 512,
) -> Packing:
    """Deduplicated images ``g(C)`` of the seeds over non-backtracking words

    Words are extended on the left, level by level up to ``max_word_len``;
    within a level the frontier is expanded lowest-curvature-first.
    Images with curvature below ``T`` (and lines) are kept, seeds always.
    With ``prune`` a word is not extended further once ``patience``
    consecutive extensions produced no new in-bound circle.

    The result does not depend on ``workers`` or on the order of generators.
    """
    if not T > 0:
        raise ValueError(f"curvature bound must be positive, got {T}")
    if max_word_len < 0:
        raise ValueError(f"max_word_len must be nonnegative, got {max_word_len}")
    if patience < 1:
        raise ValueError(f"patience must be at least 1, got {patience}")

    seeds = list(seeds)
    index = DedupIndex()
    for pos, seed in enumerate(seeds):
        index.insert_if_absent(circle_key(seed), 0, (-1, -1, pos, None, seed))

    seed_keys = tuple(circle_key(s) for s in seeds)
    frontier = [_Node(tuple(seeds), -1, 0, seed_keys)]
    # Words with equal seed images and leftmost letter have equal subtrees
    seen = {(-1, seed_keys)}
    expander = _Expander(presentation, T, index, prune, patience, window)

    workers = cap_workers(workers)
    pool = WorkerPool(workers, name="orbit") if workers > 1 else None
    pb = pbm.get_levels_pb(recreate=True, desc="Orbit levels")
    pbm.set_total("levels", max_word_len)

    levels = 0
    expanded = 0
    try:
        if pool is not None:
            pool.__enter__()

        for level in range(1, max_word_len + 1):
            if not frontier or not expander.letters:
                break

            jobs = [
                partial(expander.expand, start, frontier[start:start + chunk_size], level)
                for start in range(0, len(frontier), chunk_size)
            ]
            if pool is not None:
                results = pool.map(jobs)
            else:
                results = [job() for job in jobs]

            level_nodes = {}
            cut = 0
            for children in results:
                for child in children:
                    expanded += 1
                    if child.cut:
                        cut += 1
                        continue
                    key = (child.first, child.image_keys)
                    if key in seen:
                        continue
                    # Same word reached twice within a level: keep the fewer misses
                    other = level_nodes.get(key)
                    if other is None or child.misses < other.misses:
                        level_nodes[key] = _Node(child.images, child.first, child.misses, child.image_keys)
            seen.update(level_nodes)
            next_frontier = sorted(level_nodes.values(), key=_frontier_order)

            log.debug(
                f"Level {level}: {len(frontier)} words expanded, {cut} cut, " \
                f"{len(next_frontier)} in next frontier, {len(index)} circles"
            )
            frontier = next_frontier
            levels = level
            pb.update(1)
    finally:
        if pool is not None:
            pool.__exit__(None, None, None)
        pb.close()

    index.check_collision_rate()
    duplicate_ratio = index.collisions / index.attempts if index.attempts else 0.0
    log.debug(f"Dedup: {index.attempts} inserts, {index.collisions} duplicates ({duplicate_ratio:.1%})")

    # Deterministic order: seeds, then by word length, curvature and key
    entries = []
    for key, (level, provenance) in index.items():
        entries.append((key, level, provenance))

    seed_entries = sorted((e for e in entries if e[1] == 0), key=lambda e: e[2][2])
    other_entries = sorted(
        (e for e in entries if e[1] > 0),
        key=lambda e: (e[1], e[2][4].curvature, e[0])
    )
    ordered = seed_entries + other_entries
    position = {e[0]: pos for pos, e in enumerate(ordered)}

    circles = [e[2][4] for e in ordered]
    word_lens = [e[1] for e in ordered]
    parents = [
        -1 if e[1] == 0 else position.get(e[2][3], -1)
        for e in ordered
    ]

    log.info(
        f"Enumerated {len(circles)} circles with curvature below {T:g} " \
        f"over {levels} word levels ({expanded} words)"
    )

    source = {
        "type": "orbit",
        "presentation": presentation.to_dict(),
        "tmax": T,
        "max_word_len": max_word_len,
        "prune": prune,
        "patience": patience,
    }
    if window is not None:
        source["window"] = list(window)

    return Packing(
        circles,
        word_lens,
        parents,
        T,
        source=source,
        seed_count=len(seed_entries),
        stats={
            "words": expanded,
            "levels": levels,
            "dedup_attempts": index.attempts,
            "dedup_collisions": index.collisions,
        },
    )
