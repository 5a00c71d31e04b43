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

"""Packing CSV with a JSON sidecar

One row per circle::

    kind,curvature,cx,cy,nx,ny,offset,word_len

Circles fill ``cx, cy`` and leave the line columns empty, lines do the
opposite and have curvature 0. Floats are written with 17 significant digits.
"""

import csv
import io
import logging
import math
from pathlib import Path
from typing import Optional, Union

from .. import __version__
from .. import json_op
from ..errors import PackingParseError
from ..packing import CircleRecord, Packing

__all__ = (
    "PACKING_HEADER", "emit_packing_csv", "parse_packing_csv",
    "write_packing", "read_packing", "sidecar_path"
)

log = logging.getLogger(__name__)

PACKING_HEADER = ("kind", "curvature", "cx", "cy", "nx", "ny", "offset", "word_len")

def fmt_float(value) -> str:
    if value is None:
        return ""
    return format(float(value), ".17g")

def emit_packing_csv(packing: Packing, sort: bool = False) -> str:
    """Render ``packing`` as CSV text, in canonical order when ``sort`` is set"""
    records = packing.sorted_records() if sort else packing.records

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PACKING_HEADER)
    for rec in records:
        writer.writerow([
            rec.kind,
            fmt_float(rec.curvature),
            fmt_float(rec.cx),
            fmt_float(rec.cy),
            fmt_float(rec.nx),
            fmt_float(rec.ny),
            fmt_float(rec.offset),
            str(rec.word_len),
        ])
    return out.getvalue()

def _float(value: str, column: str, row: int, required: bool) -> Optional[float]:
    if value == "":
        if required:
            raise PackingParseError(f"column '{column}' is empty", row)
        return None
    try:
        result = float(value)
    except ValueError:
        raise PackingParseError(f"column '{column}' is not a number: {value!r}", row) from None
    if not math.isfinite(result):
        raise PackingParseError(f"column '{column}' is not finite: {value!r}", row)
    return result

def _parse_row(fields, row: int) -> CircleRecord:
    if len(fields) != len(PACKING_HEADER):
        raise PackingParseError(f"expected {len(PACKING_HEADER)} columns, got {len(fields)}", row)

    kind, curvature, cx, cy, nx, ny, offset, word_len = fields
    try:
        word_len = int(word_len)
    except ValueError:
        raise PackingParseError(f"column 'word_len' is not an integer: {word_len!r}", row) from None
    if word_len < 0:
        raise PackingParseError(f"column 'word_len' is negative: {word_len}", row)

    curvature = _float(curvature, "curvature", row, True)
    if kind == "circle":
        if curvature == 0:
            raise PackingParseError("a circle row must have nonzero curvature", row)
        if nx or ny or offset:
            raise PackingParseError("a circle row must leave nx, ny and offset empty", row)
        return CircleRecord(
            "circle", curvature, _float(cx, "cx", row, True), _float(cy, "cy", row, True),
            None, None, None, word_len
        )
    elif kind == "line":
        if curvature != 0:
            raise PackingParseError("a line row must have curvature 0", row)
        if cx or cy:
            raise PackingParseError("a line row must leave cx and cy empty", row)
        rec = CircleRecord(
            "line", 0.0, None, None, _float(nx, "nx", row, True), _float(ny, "ny", row, True),
            _float(offset, "offset", row, True), word_len
        )
        if rec.nx == 0 and rec.ny == 0:
            raise PackingParseError("a line row must have a nonzero normal", row)
        return rec

    raise PackingParseError(f"unknown kind {kind!r}, expected 'circle' or 'line'", row)

def parse_packing_csv(
    text: str,
    bound: Optional[float] = None,
    source: Optional[dict] = None,
    seed_count: int = 0,
    stats: Optional[dict] = None,
) -> Packing:
    """Inverse of :func:`emit_packing_csv`

    Without ``bound`` the largest curvature in the file is used.
    Row numbers in errors count the header as row 1.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise PackingParseError("file is empty, expected a header row", 1) from None
    if tuple(header) != PACKING_HEADER:
        raise PackingParseError(f"bad header {','.join(header)!r}, expected {','.join(PACKING_HEADER)!r}", 1)

    records = []
    for row, fields in enumerate(reader, start=2):
        if not fields:
            continue
        records.append(_parse_row(fields, row))

    circles = [rec.to_circle() for rec in records]
    if bound is None:
        bound = max((rec.curvature for rec in records), default=0.0)

    try:
        return Packing(
            circles,
            [rec.word_len for rec in records],
            [-1] * len(records),
            bound,
            source=source,
            seed_count=seed_count,
            stats=stats,
            records=records,
        )
    except ValueError as e:
        # Duplicate circles; report the later row
        pos = int(str(e).split()[1])
        raise PackingParseError(str(e), pos + 2) from None

def sidecar_path(path: Union[str, Path]) -> Path:
    return Path(path).with_suffix(".json")

def write_packing(packing: Packing, path: Union[str, Path], sort: bool = True) -> Path:
    """Write the CSV and its JSON sidecar; the output is a function of the circle set"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    path.write_text(emit_packing_csv(packing, sort=sort), encoding="utf-8", newline="")

    sidecar = {
        "source": packing.source,
        "tmax": packing.bound,
        "count": len(packing),
        "sorted": sort,
        "seed_count": 0 if sort else packing.seed_count,
        "stats": packing.stats,
        "version": __version__,
    }
    sidecar_path(path).write_text(json_op.dumps(sidecar) + "\n", encoding="utf-8")

    log.info(f"Wrote {len(packing)} circles to '{path}'")
    return path

def read_packing(path: Union[str, Path]) -> Packing:
    """Read a packing CSV, taking bound and provenance from its sidecar when present"""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"packing file '{path}' does not exist")

    meta = {}
    sidecar = sidecar_path(path)
    if sidecar.exists():
        try:
            meta = json_op.loads(sidecar.read_text(encoding="utf-8"))
        except json_op.JSONDecodeError as e:
            raise PackingParseError(f"sidecar '{sidecar}' is not valid JSON: {e}") from None
    else:
        log.warning(
            f"'{path}' has no sidecar '{sidecar.name}', " \
            "taking the largest curvature in the file as the enumeration bound"
        )

    packing = parse_packing_csv(
        path.read_text(encoding="utf-8"),
        bound=meta.get("tmax"),
        source=meta.get("source"),
        seed_count=meta.get("seed_count", 0),
        stats=meta.get("stats"),
    )
    log.debug(f"Read {len(packing)} circles from '{path}' (bound {packing.bound:g})")
    return packing
