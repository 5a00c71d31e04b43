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
from pathlib import Path
from typing import Dict, List, Tuple

from ..config import ExperimentConfig
from ..counting import (
    Disk, Region, count_series, default_grid, dual_count_gap, fit_exponent, ratio_series
)
from ..errors import ConfigError, InsufficientData
from ..format import (
    emit_gap_csv, emit_ratio_csv, read_packing, read_series,
    write_grid, write_json, write_packing, write_series, write_svg
)
from ..measures import (
    GridSpec, compare_measures, constant_consistency, critical_exponent_circles,
    critical_exponent_orbit, omega_empirical, omega_from_ps, orbit_points, ps_measure_grid
)
from ..packing import Packing, build_packing
from ..utils import cap_workers, create_directory, safe_file_name

log = logging.getLogger(__name__)

__all__ = (
    "cmd_generate", "cmd_count", "cmd_fit", "cmd_ratio", "cmd_measure", "cmd_render"
)

def _out_dir(config: ExperimentConfig) -> Path:
    return create_directory(config.output)

def _out_file(config: ExperimentConfig, name: str, suffix: str) -> Path:
    return _out_dir(config) / safe_file_name(name, suffix)

def packing_path(config: ExperimentConfig) -> Path:
    if config.input is not None:
        return Path(config.input)
    return Path(config.output) / safe_file_name(config.label, ".csv")

def _load_packing(config: ExperimentConfig) -> Packing:
    return read_packing(packing_path(config))

def _regions(config: ExperimentConfig, packing: Packing) -> Dict[str, Region]:
    """Configured regions, or the disk enclosing the packing"""
    if config.regions:
        return config.regions

    box = packing.bounding_box()
    if box is None:
        raise ConfigError("packing has no circles to derive a region from, set 'regions' in the config")
    xmin, xmax, ymin, ymax = box
    center = complex((xmin + xmax) / 2, (ymin + ymax) / 2)
    radius = max(xmax - xmin, ymax - ymin) / 2
    log.debug(f"No regions configured, using the enclosing disk at {center} with radius {radius:g}")
    return {"enclosing": Disk(center, radius)}

def _t_grid(config: ExperimentConfig, packing: Packing) -> List[float]:
    t_max = config.tmax or packing.bound
    grid = config.t_grid
    if grid is None:
        return default_grid(t_max)
    if isinstance(grid, dict):
        return default_grid(grid.get("t_max", t_max), grid.get("t_min"))
    return list(grid)

def cmd_generate(config: ExperimentConfig) -> Path:
    if config.packing is None:
        raise ConfigError("'generate' needs a 'packing' entry in the config")
    if config.tmax is None:
        raise ConfigError("'generate' needs 'tmax' (config or --tmax)")

    packing = build_packing(
        config.packing,
        config.tmax,
        max_word_len=config.max_word_len,
        prune=config.prune,
        patience=config.patience,
        workers=cap_workers(config.workers),
    )
    violations = packing.stats.get("descartes_violations", 0)
    if violations:
        log.warning(f"{violations} quadruples failed the Descartes check")

    return write_packing(packing, _out_file(config, config.label, ".csv"))

def cmd_count(config: ExperimentConfig) -> List[Path]:
    packing = _load_packing(config)
    grid = _t_grid(config, packing)

    written = []
    for name, region in _regions(config, packing).items():
        series = count_series(packing, region, grid, config.mode)
        log.info(f"Region '{name}': N = {series.N[-1]} circles ({config.mode}) at T = {series.T[-1]:g}")
        written.append(write_series(series, _out_file(config, f"count_{name}_{config.mode}", ".csv")))

        gap = dual_count_gap(packing, region, grid)
        path = _out_file(config, f"gap_{name}", ".csv")
        path.write_text(emit_gap_csv(gap), encoding="utf-8", newline="")
        log.info(f"Region '{name}': largest |N_meets - N_center| is {gap.max_gap}")
        written.append(path)

    return written

def cmd_fit(config: ExperimentConfig, series_path=None) -> Path:
    if series_path is not None:
        series = read_series(series_path)
        window = (config.window[0], config.window[1]) if config.window else None
        fit = fit_exponent(series, window)
        log.info(f"Exponent {fit.exponent:.4f} +- {fit.stderr:.4f} from '{series_path}'")
        report = {"series": str(series_path), "fit": fit.to_dict()}
        return write_json(report, _out_file(config, f"fit_{Path(series_path).stem}", ".json"))

    packing = _load_packing(config)
    grid = _t_grid(config, packing)
    fits = {}
    for name, region in _regions(config, packing).items():
        series = count_series(packing, region, grid, config.mode)
        fit = fit_exponent(series)
        log.info(
            f"Region '{name}': exponent {fit.exponent:.4f} +- {fit.stderr:.4f}, " \
            f"constant {fit.constant:.4g} over T in [{fit.window[0]:g}, {fit.window[1]:g}]"
        )
        fits[name] = {"region": region.to_dict(), "fit": fit.to_dict()}

    report = {"mode": config.mode, "source": packing.source, "fits": fits}
    return write_json(report, _out_file(config, f"fit_{config.label}_{config.mode}", ".json"))

def _ratio_pair(config: ExperimentConfig, packing: Packing) -> Tuple[Tuple[str, Region], Tuple[str, Region]]:
    regions = config.regions
    pair = config.ratio_regions
    if pair is None:
        if len(regions) < 2:
            raise ConfigError("'ratio' needs 'ratio_regions' or at least two 'regions'")
        return tuple(list(regions.items())[:2])

    resolved = []
    for pos, item in enumerate(pair):
        if isinstance(item, str):
            if item not in regions:
                raise ConfigError(f"ratio_regions[{pos}]: no region named '{item}'")
            resolved.append((item, regions[item]))
        else:
            resolved.append((f"E{pos + 1}", item))
    return tuple(resolved)

def cmd_ratio(config: ExperimentConfig) -> Path:
    packing = _load_packing(config)
    (name1, region1), (name2, region2) = _ratio_pair(config, packing)
    report = ratio_series(packing, region1, region2, _t_grid(config, packing), config.mode)

    log.info(
        f"N_T({name1}) / N_T({name2}) = {report.last_value:.4f} at T = {report.T[-1]:g}, " \
        f"drift over the last decade {report.max_drift:.2%}"
    )
    path = _out_file(config, f"ratio_{name1}_{name2}", ".csv")
    path.write_text(emit_ratio_csv(report), encoding="utf-8", newline="")
    write_json(
        {
            "regions": [name1, name2],
            "mode": config.mode,
            "last_value": report.last_value,
            "max_drift": report.max_drift,
            "flagged": list(report.flagged),
        },
        path.with_suffix(".json"),
    )
    return path

def cmd_measure(config: ExperimentConfig) -> Path:
    if config.packing is None:
        raise ConfigError("'measure' needs a 'packing' entry in the config to build the group")

    packing = _load_packing(config)
    box = packing.bounding_box()
    if box is None:
        raise ConfigError("packing has no circles to lay a grid over")
    nx, ny = config.grid
    spec = GridSpec.around(box, nx, ny)

    lo, hi = config.window if config.window else (packing.bound / 2, packing.bound)
    empirical = omega_empirical(packing, spec, lo, hi / lo)

    orbit = orbit_points(config.packing.group(), config.orbit_depth)
    try:
        orbit_estimate = critical_exponent_orbit(orbit)
    except InsufficientData as e:
        log.warning(f"Orbit growth estimate unavailable: {e}")
        orbit_estimate = None

    # The circle-count fit is the primary estimate of delta
    regions = _regions(config, packing)
    name, region = next(iter(regions.items()))
    series = count_series(packing, region, _t_grid(config, packing), config.mode)
    circle_estimate = critical_exponent_circles(series)
    delta = circle_estimate.delta
    if orbit_estimate is not None and abs(orbit_estimate.delta - delta) > 0.1:
        log.warning(
            f"Exponent estimates disagree: orbit growth {orbit_estimate.delta:.4f}, " \
            f"circle count {delta:.4f}"
        )

    s = delta + config.s_offset
    ps = ps_measure_grid(orbit, s, spec, config.height_cut, delta=delta)
    omega = omega_from_ps(ps, delta)
    comparison = compare_measures(empirical, omega)
    log.info(
        f"Empirical vs Patterson-Sullivan measure: pearson {comparison.pearson:.4f}, " \
        f"total variation {comparison.total_variation:.4f}"
    )

    constants = constant_consistency(packing, list(regions.values()), hi, delta, omega, config.mode)
    log.info(f"Region constants {['%.4g' % c for c in constants.constants]}, spread {constants.spread:.2%}")

    write_grid(empirical, _out_file(config, f"omega_empirical_{config.label}", ".csv"))
    write_grid(omega, _out_file(config, f"omega_ps_{config.label}", ".csv"))
    report = {
        "window": [lo, hi],
        "grid": spec.to_dict(),
        "orbit": {"depth": config.orbit_depth, "points": len(orbit)},
        "exponents": {
            "circle_count": circle_estimate.to_dict(),
            "orbit_growth": orbit_estimate.to_dict() if orbit_estimate is not None else None,
        },
        "s": s,
        "height_cut": config.height_cut,
        "comparison": comparison.to_dict(),
        "constants": dict(zip(regions.keys(), constants.constants)),
        "constant_spread": constants.spread,
        "seed": config.seed,
    }
    return write_json(report, _out_file(config, f"measure_{config.label}", ".json"))

def cmd_render(config: ExperimentConfig, width: int = 800, stroke: str = "black") -> Path:
    packing = _load_packing(config)
    return write_svg(packing, _out_file(config, config.label, ".svg"), width, stroke)
