import re

import numpy as np
import pytest

from kleinian_packing import json_op
from kleinian_packing.counting import CountSeries
from kleinian_packing.errors import SeriesParseError
from kleinian_packing.format import (
    emit_series_csv,
    parse_series_csv,
    read_grid,
    read_series,
    render_packing_svg,
    write_grid,
    write_json,
    write_series,
)
from kleinian_packing.measures import GridSpec, MeasureGrid
from kleinian_packing.packing import Packing

def test_series_file(tmp_path):
    series = CountSeries((10.0, 20.0, 40.5), (3, 9, 27))
    path = write_series(series, tmp_path / "series.csv")
    assert path.read_text().splitlines()[0] == "T,N"
    again = read_series(path)
    assert again.T == series.T
    assert again.N == series.N

def test_series_accepts_integral_floats():
    series = parse_series_csv("T,N\n1,2.0\n2,5\n")
    assert series.N == (2, 5)

@pytest.mark.parametrize("text, row", [
    ("T,M\n1,2\n", 1),
    ("T,N\n1,2,3\n", 2),
    ("T,N\n1,2\nten,4\n", 3),
    ("T,N\n-1,2\n", 2),
    ("T,N\n1,2.5\n", 2),
    ("T,N\n1,-2\n", 2),
])
def test_series_parse_errors(text, row):
    with pytest.raises(SeriesParseError) as e:
        parse_series_csv(text)
    assert e.value.row == row

def test_series_must_increase():
    with pytest.raises(SeriesParseError):
        parse_series_csv("T,N\n2,1\n1,2\n")

def test_emit_series():
    text = emit_series_csv(CountSeries((10.0,), (4,)))
    assert text == "T,N\n10,4\n"

def test_grid_file(tmp_path):
    spec = GridSpec(-1, 1, 0, 1, 3, 2)
    grid = MeasureGrid(spec, np.arange(6).reshape(2, 3), kind="empirical").normalize()
    path = write_grid(grid, tmp_path / "omega.csv")
    assert len(path.read_text().splitlines()) == 2

    again = read_grid(path)
    assert again.spec == spec
    assert again.normalized
    assert again.kind == "empirical"
    assert again.total_mass == 15
    assert np.array_equal(again.weights, grid.weights)

def test_grid_needs_header(tmp_path):
    spec = GridSpec(0, 1, 0, 1, 2, 2)
    path = write_grid(MeasureGrid(spec, np.ones((2, 2))), tmp_path / "g.csv")
    path.with_suffix(".json").unlink()
    with pytest.raises(FileNotFoundError):
        read_grid(path)

def test_grid_shape_checked(tmp_path):
    spec = GridSpec(0, 1, 0, 1, 2, 2)
    path = write_grid(MeasureGrid(spec, np.ones((2, 2))), tmp_path / "g.csv")
    path.write_text("1,1\n1,1,1\n")
    with pytest.raises(SeriesParseError):
        read_grid(path)

def test_json_report_is_sorted(tmp_path):
    path = write_json({"b": 1, "a": np.float64(0.5)}, tmp_path / "r.json")
    text = path.read_text()
    assert text.index('"a"') < text.index('"b"')
    assert json_op.loads(text) == {"a": 0.5, "b": 1}

def test_svg_one_element_per_circle(gasket_100, strip_packing):
    svg = render_packing_svg(gasket_100)
    assert len(re.findall(r"<circle ", svg)) == len(gasket_100)
    assert "<line " not in svg

    svg = render_packing_svg(strip_packing)
    assert len(re.findall(r"<line ", svg)) == 2
    assert len(re.findall(r"<circle ", svg)) == len(strip_packing) - 2

def test_svg_empty_packing():
    svg = render_packing_svg(Packing([], [], [], 10))
    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")
    assert "<circle " not in svg

def test_svg_view_box_is_bounding_window(gasket_100):
    svg = render_packing_svg(gasket_100)
    view = [float(v) for v in re.search(r'viewBox="([^"]+)"', svg).group(1).split()]
    xmin, xmax, ymin, ymax = gasket_100.bounding_box()
    # y is flipped
    assert view == pytest.approx([xmin, -ymax, xmax - xmin, ymax - ymin], abs=1e-8)
