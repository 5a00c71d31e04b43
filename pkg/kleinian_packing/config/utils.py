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
import typing

from ..counting import COUNT_MODES, Region, region_from_dict
from ..errors import ConfigError, KleinianPackingException
from ..packing import PackingSpec
from ..utils import convert_int_or_float, split_comma_separated

__all__ = (
    "validate_bool", "validate_int", "validate_positive_int", "validate_nonnegative_int",
    "validate_positive_float", "validate_optional_positive_float",
    "validate_threads", "validate_log_level", "validate_mode",
    "validate_grid", "validate_window", "validate_t_grid",
    "validate_regions", "validate_ratio_regions", "validate_packing_spec",
    "validate_str", "load_env", "ConfigTypeError"
)

log = logging.getLogger(__name__)

class ConfigTypeError(ConfigError):
    pass

# Utilities
def validate_bool(val):
    if isinstance(val, str):
        value = val.strip().lower()

        # Is it 1 or 0 ?
        try:
            return bool(int(value))
        except ValueError:
            pass

        if value in ("true", "yes", "on"):
            return True
        elif value in ("false", "no", "off"):
            return False
        else:
            raise ConfigTypeError(f"'{val}' is not valid boolean value")
    else:
        return bool(val)

def validate_str(val):
    if val is None:
        return None
    if not isinstance(val, str):
        raise ConfigTypeError(f"'{val}' is not a string")
    return val

def validate_int(val):
    if isinstance(val, bool):
        raise ConfigTypeError(f"'{val}' is not valid integer")
    if isinstance(val, float) and val.is_integer():
        return int(val)
    try:
        return int(val)
    except (TypeError, ValueError):
        raise ConfigTypeError(f"'{val}' is not valid integer")

def validate_positive_int(val):
    val = validate_int(val)
    if val < 1:
        raise ConfigTypeError(f"'{val}' must be at least 1")
    return val

def validate_nonnegative_int(val):
    val = validate_int(val)
    if val < 0:
        raise ConfigTypeError(f"'{val}' must not be negative")
    return val

def validate_positive_float(val):
    try:
        val = float(convert_int_or_float(val) if isinstance(val, str) else val)
    except (TypeError, ValueError):
        raise ConfigTypeError(f"'{val}' is not valid number")
    if not val > 0 or val == float("inf"):
        raise ConfigTypeError(f"'{val}' must be a positive finite number")
    return val

def validate_optional_positive_float(val):
    if val is None:
        return None
    return validate_positive_float(val)

def validate_threads(val):
    if val is None:
        return None
    return validate_positive_int(val)

def validate_log_level(val):
    if val is None:
        return None
    val = val if isinstance(val, int) else str(val).upper()
    log_level = logging.getLevelName(val)
    if log_level == f"Level {val}":
        # Instead of raising exception,
        # logging.getLevelName will return string "Level {level}"
        raise ConfigTypeError(f"{val!r} is not valid logger level")

    return val

def validate_mode(val):
    if val not in COUNT_MODES:
        raise ConfigTypeError(f"'{val}' is not valid count mode, must be one of {list(COUNT_MODES)}")
    return val

def validate_grid(val):
    """``"NxM"`` or ``[N, M]``; returns ``(nx, ny)``"""
    if isinstance(val, str):
        parts = val.lower().split("x")
    elif isinstance(val, (list, tuple)):
        parts = list(val)
    else:
        raise ConfigTypeError(f"'{val}' is not valid grid, expected 'NxM'")

    if len(parts) != 2:
        raise ConfigTypeError(f"'{val}' is not valid grid, expected 'NxM'")
    try:
        nx, ny = (validate_positive_int(p) for p in parts)
    except ConfigTypeError:
        raise ConfigTypeError(f"'{val}' is not valid grid, expected 'NxM' with positive integers") from None
    return nx, ny

def validate_window(val):
    """``"T,KT"`` or ``[T, KT]`` curvature window; returns ``(T, KT)``"""
    if val is None:
        return None
    parts = split_comma_separated(val) if isinstance(val, str) else val
    if not isinstance(parts, (list, tuple)) or len(parts) != 2:
        raise ConfigTypeError(f"'{val}' is not valid window, expected 'T,KT'")

    lo, hi = (validate_positive_float(p) for p in parts)
    if not hi > lo:
        raise ConfigTypeError(f"window '{val}' must have KT > T")
    return lo, hi

def validate_t_grid(val):
    """``null`` (derived from ``tmax``), a list of T values, or ``{"t_min": .., "t_max": ..}``"""
    if val is None:
        return None
    if isinstance(val, dict):
        unknown = set(val) - {"t_min", "t_max"}
        if unknown:
            raise ConfigTypeError(f"unknown t_grid keys {sorted(unknown)}")
        return {key: validate_positive_float(v) for key, v in val.items()}
    if isinstance(val, str):
        val = split_comma_separated(val)
    if not isinstance(val, (list, tuple)) or not val:
        raise ConfigTypeError(f"'{val}' is not valid t_grid")

    grid = [validate_positive_float(t) for t in val]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigTypeError("t_grid values must be strictly increasing")
    return grid

def _region(data, name) -> Region:
    try:
        region = region_from_dict(data)
    except KleinianPackingException as e:
        raise ConfigTypeError(f"region '{name}': {e}") from None
    if not region.is_bounded:
        raise ConfigTypeError(f"region '{name}' is unbounded, counting regions must be bounded")
    return region

def validate_regions(val) -> typing.Dict[str, Region]:
    """Named bounded regions; a list is named ``r0``, ``r1``, ..."""
    if val is None:
        return {}
    if isinstance(val, (list, tuple)):
        val = {f"r{i}": data for i, data in enumerate(val)}
    if not isinstance(val, dict):
        raise ConfigTypeError(f"'{val}' is not valid regions, expected an object of named regions")
    return {str(name): _region(data, name) for name, data in val.items()}

def validate_ratio_regions(val):
    """Pair of region names or region objects"""
    if val is None:
        return None
    if not isinstance(val, (list, tuple)) or len(val) != 2:
        raise ConfigTypeError(f"'{val}' is not valid ratio_regions, expected a pair")
    return [v if isinstance(v, str) else _region(v, f"ratio_regions[{i}]") for i, v in enumerate(val)]

def validate_packing_spec(val):
    if val is None:
        return None
    if isinstance(val, PackingSpec):
        return val
    try:
        return PackingSpec.from_dict(val)
    except ConfigError as e:
        raise ConfigTypeError(str(e)) from None

def load_env(env_key, env_value, validator):
    try:
        return validator(env_value)
    except Exception as e:
        raise ConfigError(
            f'An error happened when validating env {env_key}. ' \
            f'Reason: {e}'
        ) from None
