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

import argparse
import logging
import sys
from gettext import gettext

from .utils import print_version_info
from ..counting import COUNT_MODES
from .. import __description__

log = logging.getLogger(__name__)

COMMANDS = ("generate", "count", "fit", "ratio", "measure", "render")

class ModifiedArgumentParser(argparse.ArgumentParser):
    """Modified :class:`argparse.ArgumentParser`

    The only thing modified is :meth:`argparse.ArgumentParser.error()` function.
    The function should not show whole usage, instead just show the error for simplicity.
    Usage errors exit with status 1.
    """
    def error(self, message, status=1):
        self.exit(status, f'Error: {gettext(message)}\n')

class PrintVersionAction(argparse.Action):
    def __call__(self, *args, **kwargs):
        print_version_info()
        sys.exit(0)

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--config',
        '-c',
        metavar='PATH',
        help='Experiment config (JSON). Defaults to $CIRCLES_CONFIG if set',
    )
    common.add_argument(
        '--tmax',
        type=float,
        help='Curvature bound T_max',
    )
    common.add_argument(
        '--out',
        '-o',
        metavar='DIR',
        dest='output',
        help='Output directory',
    )
    common.add_argument(
        '--input',
        '-i',
        metavar='PATH',
        help='Packing CSV to read (default: <out>/<label>.csv)',
    )
    common.add_argument(
        '--label',
        help='Name used for output files',
    )
    common.add_argument(
        '--mode',
        choices=COUNT_MODES,
        help='How a circle is related to a region when counting',
    )
    common.add_argument(
        '--grid',
        metavar='NxM',
        help='Measure grid size, for example 16x16',
    )
    common.add_argument(
        '--window',
        metavar='T,KT',
        help='Curvature window for the empirical measure',
    )
    common.add_argument(
        '--log-level',
        help='Set logger level, available options: CRITICAL, ERROR, WARNING, INFO, DEBUG',
    )
    common.add_argument(
        '--workers',
        '-w',
        type=int,
        help='Worker threads for orbit enumeration (capped by $CIRCLES_THREADS)',
    )
    common.add_argument(
        '--no-progress-bar',
        action='store_true',
        default=None,
        help='Disable progress bars',
    )
    return common

def get_args(argv):
    parser = ModifiedArgumentParser(description=__description__)
    parser.add_argument(
        '--version',
        '-v',
        nargs=0,
        action=PrintVersionAction,
        help='Print version details and exit',
    )

    common = _common_options()
    sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=ModifiedArgumentParser)
    sub.required = True

    sub.add_parser(
        'generate',
        parents=[common],
        help='Enumerate a packing up to curvature T_max and write it as CSV',
    )
    sub.add_parser(
        'count',
        parents=[common],
        help='Count circles in each configured region along a T grid',
    )
    fit = sub.add_parser(
        'fit',
        parents=[common],
        help='Fit the growth exponent of N_T against T',
    )
    fit.add_argument(
        '--series',
        metavar='PATH',
        help='Fit an existing T,N CSV instead of counting a packing',
    )
    sub.add_parser(
        'ratio',
        parents=[common],
        help='Ratio N_T(E1) / N_T(E2) along a T grid',
    )
    measure = sub.add_parser(
        'measure',
        parents=[common],
        help='Empirical and Patterson-Sullivan approximations of the limiting measure',
    )
    measure.add_argument(
        '--orbit-depth',
        type=int,
        help='Word length of the orbit used for the Patterson-Sullivan side',
    )
    render = sub.add_parser(
        'render',
        parents=[common],
        help='Draw a packing as SVG',
    )
    render.add_argument(
        '--width',
        type=int,
        default=800,
        help='Picture width in pixels',
    )
    render.add_argument(
        '--stroke',
        default='black',
        help='Stroke color',
    )

    args = parser.parse_args(argv)
    return parser, args
