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
import sys
import traceback

from .args_parser import get_args
from .command import *
from .utils import setup_logging, sys_argv
from ..config import ExperimentConfig, env, load_config
from ..errors import KleinianPackingException, UnderEnumerated
from ..progress_bar import progress_bar_manager

log = logging.getLogger(__name__)

_config_flags = (
    "tmax", "output", "input", "label", "mode", "grid", "window",
    "log_level", "workers", "no_progress_bar", "orbit_depth"
)

def build_config(args) -> ExperimentConfig:
    """Config file (``--config`` or ``$CIRCLES_CONFIG``) with flags on top"""
    config = load_config(args.config)
    config.override(**{key: getattr(args, key, None) for key in _config_flags})
    return config

def run_command(args, config: ExperimentConfig):
    if args.command == "generate":
        return cmd_generate(config)
    elif args.command == "count":
        return cmd_count(config)
    elif args.command == "fit":
        return cmd_fit(config, args.series)
    elif args.command == "ratio":
        return cmd_ratio(config)
    elif args.command == "measure":
        return cmd_measure(config)
    elif args.command == "render":
        return cmd_render(config, args.width, args.stroke)

def _main(argv):
    parser = None
    log = logging.getLogger("kleinian_packing")
    try:
        # Get command-line arguments
        parser, args = get_args(argv)

        # Parse config
        config = build_config(args)

        # Setup logging
        log = setup_logging('kleinian_packing', config.log_level or env.log_level or "INFO")

        if config.no_progress_bar or env.no_progress_bar:
            progress_bar_manager.disabled = True

        run_command(args, config)
        progress_bar_manager.close_all()

    # Packing enumerated to a smaller T than requested
    except UnderEnumerated as e:
        return parser, 2, str(e)

    # library error
    except KleinianPackingException as e:
        err_msg = str(e)
        return parser, 1, err_msg

    except OSError as e:
        return parser, 1, str(e)

    # Other exception
    except Exception as e:
        log.error("Unhandled exception, %s: %s" % (e.__class__.__name__, str(e)))
        traceback.print_exception(type(e), e, e.__traceback__, file=sys.stderr)
        return parser, 1, None

    else:
        # We're done here
        return parser, 0, None

def main(argv=None):
    _argv = sys_argv if argv is None else argv

    args_parser, exit_code, err_msg = _main(_argv)

    if exit_code > 0 and err_msg:
        if args_parser is not None:
            # It has error message, exit with .error()
            args_parser.error(err_msg, exit_code)
        print(f"Error: {err_msg}", file=sys.stderr)

    # There is no error during execution
    # or an error occured during parsing arguments
    # or another error that the program itself cannot handle it
    sys.exit(exit_code)
