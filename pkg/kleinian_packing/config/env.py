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

import os

from .utils import *
from ..errors import KleinianPackingException

__all__ = ("env", "ENV_PREFIX", "env_key")

ENV_PREFIX = "CIRCLES_"

def env_key(name: str) -> str:
    return f"{ENV_PREFIX}{name.upper()}"

class EnvironmentVariables:
    # (key_env: string, default_value: Any, validator_function: Callable)
    _vars = [
        [
            'threads',
            None,
            validate_threads,
        ],
        [
            'log_level',
            None,
            validate_log_level,
        ],
        [
            'no_progress_bar',
            False,
            validate_bool,
        ],
        [
            'config',
            None,
            validate_str,
        ],
    ]

    def __init__(self):
        self._table = {key: (default, validator) for key, default, validator in self._vars}

    def read(self, name):
        try:
            default_value, validator = self._table[name]
        except KeyError:
            raise KleinianPackingException(f'environment variable "{name}" is not exist')

        # Read on every access so that changes to os.environ are seen
        key = env_key(name)
        env_value = os.environ.get(key)
        if env_value is None or env_value == "":
            return default_value

        return load_env(key, env_value, validator)


_env_orig = EnvironmentVariables()

class EnvironmentVariablesProxy:
    def __getattr__(self, name):
        return _env_orig.read(name)

    def __setattr__(self, name, value):
        raise NotImplementedError

# Allow library to get values from attr easily
env = EnvironmentVariablesProxy()
