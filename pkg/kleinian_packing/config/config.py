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
import re
from pathlib import Path
from typing import Optional, Union

from .env import env, env_key
from .utils import *
from .. import json_op
from ..errors import (
    ConfigError, DescartesViolation, InvalidPresentation, SchottkyConfigurationError
)

log = logging.getLogger(__name__)

__all__ = ("ExperimentConfig", "load_config")

class ExperimentConfig:
    """Validated experiment settings

    Every key maps to ``[default, validator]``. Values go through the
    validator on assignment, so reading a key always gives the validated form.
    """
    confs = {
        "packing": [
            None, # default value
            validate_packing_spec, # validator value
        ],
        "tmax": [
            None,
            validate_optional_positive_float,
        ],
        "t_grid": [
            None,
            validate_t_grid,
        ],
        "regions": [
            {},
            validate_regions,
        ],
        "ratio_regions": [
            None,
            validate_ratio_regions,
        ],
        "mode": [
            "meets",
            validate_mode,
        ],
        "grid": [
            "16x16",
            validate_grid,
        ],
        "window": [
            None,
            validate_window,
        ],
        "output": [
            "output",
            validate_str,
        ],
        "input": [
            None,
            validate_str,
        ],
        "label": [
            "packing",
            validate_str,
        ],
        "seed": [
            0,
            validate_nonnegative_int,
        ],
        "workers": [
            1,
            validate_positive_int,
        ],
        "log_level": [
            None,
            validate_log_level,
        ],
        "max_word_len": [
            40,
            validate_positive_int,
        ],
        "prune": [
            True,
            validate_bool,
        ],
        "patience": [
            2,
            validate_positive_int,
        ],
        "orbit_depth": [
            12,
            validate_nonnegative_int,
        ],
        "s_offset": [
            0.02,
            validate_positive_float,
        ],
        "height_cut": [
            0.05,
            validate_positive_float,
        ],
        "no_progress_bar": [
            False,
            validate_bool,
        ],
    }
    default_conf = {
        x: y for x, (y, _) in confs.items()
    }

    def __init__(self, data: Optional[dict] = None, path: Optional[Path] = None):
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "_raw", {})
        object.__setattr__(self, "_data", {})

        for key, value in self.default_conf.items():
            self._set(key, value)

        for key, value in (data or {}).items():
            self._set(key, value)

    def _set(self, name, value, where=""):
        try:
            _, validator = self.confs[name]
        except KeyError:
            raise ConfigError(f"{where}unknown config key '{name}', valid keys are {list(self.confs)}") from None

        try:
            val = validator(value)
        except ConfigError as e:
            # Provide more details about error
            # Which config triggered this
            raise ConfigTypeError(f"{where}{name}: " + str(e)) from None

        self._data[name] = val
        self._raw[name] = value

    def __getattr__(self, name):
        try:
            return self._data[name]
        except KeyError:
            raise AttributeError(f"type object '{type(self).__name__}' has no attribute '{name}'") from None

    def __setattr__(self, name, value):
        self._set(name, value)

    def override(self, **values):
        """Apply flag values; ``None`` means the flag was not given"""
        for key, value in values.items():
            if value is not None:
                log.debug(f"Config '{key}' overridden from command line: {value!r}")
                self._set(key, value)

    def raw(self, name):
        return self._raw[name]

    def to_dict(self) -> dict:
        """Settings as written in the config file (pre-validation form)"""
        return {key: (value.to_dict() if hasattr(value, "to_dict") else value) for key, value in self._raw.items()}

def _key_line(text: str, key: str) -> Optional[int]:
    match = re.search(r'"' + re.escape(key) + r'"\s*:', text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1

def load_config(path: Union[str, Path, None] = None) -> ExperimentConfig:
    """Load a JSON experiment config; ``path`` falls back to ``CIRCLES_CONFIG``

    Without any path the defaults are returned.
    """
    if path is None:
        path = env.config
        if path is not None:
            log.debug(f"Using config file from {env_key('config')}: '{path}'")
    if path is None:
        return ExperimentConfig()

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Failed to read config file '{path}', reason: {e}") from None

    try:
        data = json_op.loads(text)
    except json_op.JSONDecodeError as e:
        lineno = getattr(e, "lineno", None)
        colno = getattr(e, "colno", None)
        where = f"line {lineno}, column {colno}" if lineno is not None else "unknown position"
        raise ConfigError(f"{path}: invalid JSON at {where}: {getattr(e, 'msg', e)}") from None

    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level of the config must be an object")

    config = ExperimentConfig(path=path)
    for key, value in data.items():
        line = _key_line(text, key)
        where = f"{path}:{line}: " if line is not None else f"{path}: "
        try:
            config._set(key, value, where)
        except (DescartesViolation, SchottkyConfigurationError, InvalidPresentation) as e:
            # Keep the domain error type, add the position
            raise type(e)(f"{where}{key}: {e}") from None

    log.debug(f"Loaded config '{path}'")
    return config
