import re

import pytest

from kleinian_packing import json_op
from kleinian_packing.cli import main
from kleinian_packing.format import read_packing
from kleinian_packing.utils import cap_workers

GASKET = {"type": "apollonian", "curvatures": [-1, 2, 2, 3]}

@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("CIRCLES_CONFIG", "CIRCLES_THREADS", "CIRCLES_LOG_LEVEL", "CIRCLES_NO_PROGRESS_BAR"):
        monkeypatch.delenv(name, raising=False)

@pytest.fixture
def write_config(tmp_path):
    def write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(json_op.dumps(data) if isinstance(data, dict) else data)
        return str(path)
    return write

def run(*argv):
    with pytest.raises(SystemExit) as e:
        main(list(argv) + ["--no-progress-bar"])
    return e.value.code

def generate(config, out, label="gasket"):
    return run("generate", "-c", config, "--out", str(out), "--label", label)

def test_generate(write_config, tmp_path):
    config = write_config({"packing": GASKET, "tmax": 10})
    assert generate(config, tmp_path / "out") == 0

    csv = tmp_path / "out" / "gasket.csv"
    lines = csv.read_text().splitlines()
    assert lines[0] == "kind,curvature,cx,cy,nx,ny,offset,word_len"
    assert len(lines) == 10
    assert (tmp_path / "out" / "gasket.json").exists()

    # Same config, same bytes
    assert generate(config, tmp_path / "out", "again") == 0
    assert (tmp_path / "out" / "again.csv").read_bytes() == csv.read_bytes()

def test_tmax_flag_overrides_config(write_config, tmp_path):
    config = write_config({"packing": GASKET, "tmax": 10})
    assert run("generate", "-c", config, "--out", str(tmp_path), "--tmax", "6") == 0
    assert len(read_packing(tmp_path / "packing.csv")) == 5

def test_generate_rejects_bad_quadruple(write_config, tmp_path, capsys):
    config = write_config({"packing": {"type": "apollonian", "curvatures": [1, 1, 1, 1]}, "tmax": 10})
    assert generate(config, tmp_path) == 1
    assert "Descartes" in capsys.readouterr().err
    assert not (tmp_path / "gasket.csv").exists()

def test_generate_needs_tmax(write_config, tmp_path, capsys):
    config = write_config({"packing": GASKET})
    assert generate(config, tmp_path) == 1
    assert "tmax" in capsys.readouterr().err

def test_count_beyond_bound(write_config, tmp_path, capsys):
    config = write_config({"packing": GASKET, "tmax": 10})
    generate(config, tmp_path)
    code = run("count", "-c", config, "--out", str(tmp_path), "--label", "gasket", "--tmax", "200")
    assert code == 2
    assert "--tmax 200" in capsys.readouterr().err

def test_count_writes_series_and_gap(write_config, tmp_path):
    config = write_config({
        "packing": GASKET,
        "tmax": 100,
        "t_grid": [10, 50, 100],
        "regions": {"upper": {"type": "rectangle", "xmin": -1, "xmax": 1, "ymin": 0, "ymax": 1}},
    })
    generate(config, tmp_path)
    assert run("count", "-c", config, "--out", str(tmp_path), "--label", "gasket", "--mode", "center") == 0
    series = (tmp_path / "count_upper_center.csv").read_text().splitlines()
    assert series[0] == "T,N"
    assert len(series) == 4
    gap = (tmp_path / "gap_upper.csv").read_text().splitlines()
    assert gap[0] == "T,meets,center,gap"

def test_count_default_region(write_config, tmp_path):
    config = write_config({"packing": GASKET, "tmax": 100})
    generate(config, tmp_path)
    assert run("count", "-c", config, "--out", str(tmp_path), "--label", "gasket") == 0
    assert (tmp_path / "count_enclosing_meets.csv").exists()

def test_fit_series(fixtures_dir, tmp_path):
    series = fixtures_dir / "synthetic_series.csv"
    assert run("fit", "--series", str(series), "--out", str(tmp_path)) == 0
    report = json_op.loads((tmp_path / "fit_synthetic_series.json").read_text())
    assert report["fit"]["exponent"] == pytest.approx(1.5, abs=0.02)

def test_fit_bad_series(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("T,N\n1,2\n2,x\n")
    assert run("fit", "--series", str(path), "--out", str(tmp_path)) == 1
    assert "row 3" in capsys.readouterr().err

def test_ratio_of_identical_regions(write_config, tmp_path):
    disk = {"type": "disk", "center": [0, 0.2], "radius": 0.5}
    config = write_config({
        "packing": GASKET,
        "tmax": 100,
        "t_grid": [5, 10, 50, 100],
        "regions": {"a": disk, "b": disk},
    })
    generate(config, tmp_path)
    assert run("ratio", "-c", config, "--out", str(tmp_path), "--label", "gasket") == 0

    rows = (tmp_path / "ratio_a_b.csv").read_text().splitlines()
    assert rows[0] == "T,ratio"
    assert [float(row.split(",")[1]) for row in rows[1:]] == [1, 1, 1, 1]
    summary = json_op.loads((tmp_path / "ratio_a_b.json").read_text())
    assert summary["last_value"] == 1
    assert summary["flagged"] == []

def test_ratio_needs_two_regions(write_config, tmp_path, capsys):
    config = write_config({"packing": GASKET, "tmax": 10})
    generate(config, tmp_path)
    assert run("ratio", "-c", config, "--out", str(tmp_path), "--label", "gasket") == 1
    assert "ratio_regions" in capsys.readouterr().err

def test_render(write_config, tmp_path):
    config = write_config({"packing": GASKET, "tmax": 30})
    generate(config, tmp_path)
    assert run("render", "-c", config, "--out", str(tmp_path), "--label", "gasket") == 0
    svg = (tmp_path / "gasket.svg").read_text()
    rows = (tmp_path / "gasket.csv").read_text().splitlines()[1:]
    assert len(re.findall(r"<circle ", svg)) == len(rows)

def test_measure(write_config, tmp_path):
    config = write_config({
        "packing": GASKET,
        "tmax": 1000,
        "grid": "8x8",
        "orbit_depth": 8,
    })
    generate(config, tmp_path)
    assert run("measure", "-c", config, "--out", str(tmp_path), "--label", "gasket") == 0

    report = json_op.loads((tmp_path / "measure_gasket.json").read_text())
    assert report["window"] == [500, 1000]
    assert report["grid"]["nx"] == 8
    assert -1 <= report["comparison"]["pearson"] <= 1
    assert 0 <= report["comparison"]["total_variation"] <= 1
    assert report["s"] == pytest.approx(report["exponents"]["circle_count"]["delta"] + 0.02)
    assert (tmp_path / "omega_empirical_gasket.csv").exists()
    assert (tmp_path / "omega_ps_gasket.json").exists()

def test_unknown_config_key(write_config, tmp_path, capsys):
    config = write_config('{\n  "tmax": 10,\n  "colour": "red"\n}\n')
    assert generate(config, tmp_path) == 1
    err = capsys.readouterr().err
    assert "unknown config key 'colour'" in err
    assert "config.json:3" in err

def test_invalid_json_position(write_config, tmp_path, capsys):
    config = write_config('{\n  "tmax": 10,\n  "label" "x"\n}\n')
    assert generate(config, tmp_path) == 1
    assert "line 3" in capsys.readouterr().err

def test_bad_config_value(write_config, tmp_path, capsys):
    config = write_config({"packing": GASKET, "tmax": -5})
    assert generate(config, tmp_path) == 1
    assert "tmax" in capsys.readouterr().err

def test_config_from_environment(write_config, tmp_path, monkeypatch):
    monkeypatch.setenv("CIRCLES_CONFIG", write_config({"packing": GASKET, "tmax": 10}))
    assert run("generate", "--out", str(tmp_path)) == 0
    assert len(read_packing(tmp_path / "packing.csv")) == 9

def test_thread_cap(monkeypatch):
    assert cap_workers(8) == 8
    monkeypatch.setenv("CIRCLES_THREADS", "2")
    assert cap_workers(8) == 2
    assert cap_workers(1) == 1

def test_bad_thread_env(write_config, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CIRCLES_THREADS", "many")
    config = write_config({"packing": GASKET, "tmax": 10})
    assert generate(config, tmp_path) == 1
    assert "CIRCLES_THREADS" in capsys.readouterr().err

def test_missing_command():
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 1

def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert "kleinian-packing" in capsys.readouterr().out
