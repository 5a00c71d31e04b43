import math

import pytest

from kleinian_packing.errors import InsufficientData
from kleinian_packing.counting import CountSeries, default_window, fit_exponent
from kleinian_packing.format import read_series

def _power_series(delta, c=2.0, t_min=10, t_max=1e5, points=25):
    T = [t_min * (t_max / t_min) ** (k / (points - 1)) for k in range(points)]
    return CountSeries(tuple(T), tuple(round(c * t ** delta) for t in T))

def test_synthetic_exponent():
    fit = fit_exponent(_power_series(1.5))
    assert fit.exponent == pytest.approx(1.5, abs=0.02)
    assert fit.constant == pytest.approx(2.0, rel=0.05)
    assert fit.window == pytest.approx((100, 1e5))
    assert fit.points > 0

def test_fixture_series(fixtures_dir):
    series = read_series(fixtures_dir / "synthetic_series.csv")
    fit = fit_exponent(series)
    assert fit.exponent == pytest.approx(1.5, abs=0.02)

def test_constant_series():
    series = CountSeries(tuple(float(t) for t in range(10, 200, 10)), (7,) * 19)
    fit = fit_exponent(series, (10, 190))
    assert fit.exponent == pytest.approx(0, abs=1e-12)

def test_too_few_points():
    series = _power_series(1.5, points=3)
    with pytest.raises(InsufficientData):
        fit_exponent(series)

def test_zero_counts_are_skipped():
    series = CountSeries((1.0, 2.0, 3.0, 4.0, 5.0), (0, 0, 0, 4, 5))
    with pytest.raises(InsufficientData):
        fit_exponent(series, (1, 5))

def test_window_outside_series():
    series = _power_series(1.5)
    with pytest.raises(InsufficientData):
        fit_exponent(series, (1, 1e5))
    with pytest.raises(InsufficientData):
        fit_exponent(series, (1e4, 1e3))

def test_default_window_short_series():
    series = _power_series(1.0, t_min=10, t_max=50, points=6)
    assert default_window(series) == pytest.approx((10, 50))

def test_interleaved_halves_agree():
    series = _power_series(1.3057, c=0.05, t_min=100, t_max=1e6, points=40)
    even = series.subseries(range(0, len(series), 2))
    odd = series.subseries(range(1, len(series), 2))
    f1, f2 = fit_exponent(even), fit_exponent(odd)
    tol = 2 * max(f1.stderr, f2.stderr) + 1e-3
    assert abs(f1.exponent - f2.exponent) <= tol

def test_series_validation():
    with pytest.raises(ValueError):
        CountSeries((1.0, 2.0), (1,))
    with pytest.raises(ValueError):
        CountSeries((2.0, 1.0), (1, 2))
    with pytest.raises(ValueError):
        CountSeries((1.0, 2.0), (1, -2))

def test_to_dict():
    fit = fit_exponent(_power_series(1.5))
    data = fit.to_dict()
    assert set(data) == {"exponent", "intercept", "stderr", "window"}
    assert math.isfinite(data["stderr"])
