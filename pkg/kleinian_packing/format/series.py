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

"""Count series, ratio reports and JSON reports on disk"""

import csv
import io
import logging
import math
from pathlib import Path
from typing import Union

from .. import json_op
from ..counting import CountSeries, DualCountGap, RatioReport
from ..errors import SeriesParseError
from .packing_csv import fmt_float

__all__ = (
    "emit_series_csv", "parse_series_csv", "write_series", "read_series",
    "emit_ratio_csv", "emit_gap_csv", "write_json"
)

log = logging.getLogger(__name__)

def _emit(header, rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()

def emit_series_csv(series: CountSeries) -> str:
    return _emit(("T", "N"), ((fmt_float(T), str(N)) for T, N in series.rows()))

def emit_ratio_csv(report: RatioReport) -> str:
    # nan marks a flagged point
    return _emit(("T", "ratio"), ((fmt_float(T), fmt_float(r)) for T, r in report.rows()))

def emit_gap_csv(report: DualCountGap) -> str:
    rows = zip(report.T, report.meets, report.center, report.gaps)
    return _emit(("T", "meets", "center", "gap"), ((fmt_float(T), m, c, g) for T, m, c, g in rows))

def parse_series_csv(text: str, source=None) -> CountSeries:
    """Read a ``T,N`` table; ``N`` may be written as a float if it is integral"""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["T", "N"]:
        raise SeriesParseError(f"expected header 'T,N', got {header!r}", 1)

    T, N = [], []
    for row, fields in enumerate(reader, start=2):
        if not fields:
            continue
        if len(fields) != 2:
            raise SeriesParseError(f"expected 2 columns, got {len(fields)}", row)
        try:
            t = float(fields[0])
            n = float(fields[1])
        except ValueError:
            raise SeriesParseError(f"not a number in {fields!r}", row) from None
        if not (math.isfinite(t) and t > 0):
            raise SeriesParseError(f"T must be positive and finite, got {fields[0]!r}", row)
        if n < 0 or n != int(n):
            raise SeriesParseError(f"N must be a nonnegative integer, got {fields[1]!r}", row)
        T.append(t)
        N.append(int(n))

    try:
        return CountSeries(tuple(T), tuple(N), source=dict(source or {}))
    except ValueError as e:
        raise SeriesParseError(str(e)) from None

def write_series(series: CountSeries, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_series_csv(series), encoding="utf-8", newline="")
    log.info(f"Wrote count series ({len(series)} points) to '{path}'")
    return path

def read_series(path: Union[str, Path]) -> CountSeries:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"series file '{path}' does not exist")
    return parse_series_csv(path.read_text(encoding="utf-8"), source={"file": path.name})

def write_json(data: dict, path: Union[str, Path]) -> Path:
    """Key-sorted, indented JSON report"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json_op.dumps(data) + "\n", encoding="utf-8")
    log.info(f"Wrote '{path}'")
    return path
