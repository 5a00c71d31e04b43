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

"""Measure grids as a CSV matrix plus a JSON header

Row ``i`` of the matrix is the ``i``-th cell row from ``ymin`` upward.
"""

import csv
import io
import logging
from pathlib import Path
from typing import Union

import numpy as np

from .. import json_op
from ..errors import SeriesParseError
from ..measures import GridSpec, MeasureGrid
from .packing_csv import fmt_float

__all__ = ("emit_grid_csv", "parse_grid_csv", "write_grid", "read_grid")

log = logging.getLogger(__name__)

def emit_grid_csv(grid: MeasureGrid) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for row in grid.weights:
        writer.writerow([fmt_float(w) for w in row])
    return out.getvalue()

def parse_grid_csv(text: str, header: dict) -> MeasureGrid:
    spec = GridSpec.from_dict(header)
    rows = []
    for row, fields in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not fields:
            continue
        if len(fields) != spec.nx:
            raise SeriesParseError(f"expected {spec.nx} cells, got {len(fields)}", row)
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            raise SeriesParseError(f"not a number in {fields!r}", row) from None
    if len(rows) != spec.ny:
        raise SeriesParseError(f"expected {spec.ny} rows, got {len(rows)}")

    return MeasureGrid(
        spec,
        np.array(rows),
        normalized=bool(header.get("normalized", False)),
        total_mass=header.get("total_mass"),
        kind=header.get("kind", ""),
    )

def write_grid(grid: MeasureGrid, path: Union[str, Path]) -> Path:
    """Write ``<path>`` (CSV) and ``<path>.json`` next to it"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_grid_csv(grid), encoding="utf-8", newline="")
    path.with_suffix(".json").write_text(json_op.dumps(grid.to_dict()) + "\n", encoding="utf-8")
    log.info(f"Wrote {grid.spec.nx}x{grid.spec.ny} {grid.kind or 'measure'} grid to '{path}'")
    return path

def read_grid(path: Union[str, Path]) -> MeasureGrid:
    path = Path(path)
    header_path = path.with_suffix(".json")
    if not path.exists() or not header_path.exists():
        raise FileNotFoundError(f"grid '{path}' needs both the CSV and '{header_path.name}'")
    header = json_op.loads(header_path.read_text(encoding="utf-8"))
    return parse_grid_csv(path.read_text(encoding="utf-8"), header)
