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

"""Static SVG rendering of a packing"""

import logging
from pathlib import Path
from typing import Optional, Tuple, Union

from ..geometry import GeneralizedCircle
from ..packing import Packing

__all__ = ("SVG", "render_packing_svg", "write_svg")

log = logging.getLogger(__name__)

Box = Tuple[float, float, float, float]

class SVG:
    """Minimal string builder; y is flipped so the picture reads like the complex plane"""
    def __init__(self):
        self.svg = ""

    def header(self, box: Box, width: int):
        xmin, xmax, ymin, ymax = box
        w, h = xmax - xmin, ymax - ymin
        height = max(1, round(width * h / w))
        self.svg += f"""<?xml version="1.0" standalone="no"?>
<svg version="1.1" width="{width}" height="{height}" viewBox="{xmin:.9g} {-ymax:.9g} {w:.9g} {h:.9g}" xmlns="http://www.w3.org/2000/svg">
"""

    def group_start(self, attr: dict):
        g_attr = " ".join(f'{key}="{value}"' for key, value in attr.items())
        self.svg += f"<g {g_attr}>\n"

    def group_end(self):
        self.svg += "</g>\n"

    def circle(self, cx, cy, r, extra=""):
        extra = f" {extra}" if extra else ""
        self.svg += f'<circle cx="{cx:.12g}" cy="{-cy:.12g}" r="{r:.12g}"{extra}/>\n'

    def line(self, x1, y1, x2, y2, extra=""):
        extra = f" {extra}" if extra else ""
        self.svg += f'<line x1="{x1:.12g}" y1="{-y1:.12g}" x2="{x2:.12g}" y2="{-y2:.12g}"{extra}/>\n'

    def get_svg(self):
        return f"{self.svg}</svg>\n"

def _line_segment(line: GeneralizedCircle, box: Box):
    """Chord of the view window's circumscribed disk along ``line``"""
    xmin, xmax, ymin, ymax = box
    c = complex((xmin + xmax) / 2, (ymin + ymax) / 2)
    half = abs(complex(xmax - xmin, ymax - ymin))
    n = line.normal
    foot = c + n * (line.offset - (n.conjugate() * c).real)
    along = 1j * n * half
    return foot - along, foot + along

def render_packing_svg(packing: Packing, width: int = 800, box: Optional[Box] = None, stroke: str = "black") -> str:
    """One ``circle`` element per circle and one ``line`` element per line

    The viewBox is ``box``, by default the bounding window of the packing.
    """
    if box is None:
        box = packing.bounding_box() or (-1.0, 1.0, -1.0, 1.0)
    stroke_width = (box[1] - box[0]) / 1000

    svg = SVG()
    svg.header(box, width)
    svg.group_start({"fill": "none", "stroke": stroke, "stroke-width": f"{stroke_width:.6g}"})
    for circle in packing:
        if circle.is_line:
            z1, z2 = _line_segment(circle, box)
            svg.line(z1.real, z1.imag, z2.real, z2.imag)
        else:
            p = circle.center
            svg.circle(p.real, p.imag, circle.radius)
    svg.group_end()
    return svg.get_svg()

def write_svg(packing: Packing, path: Union[str, Path], width: int = 800, stroke: str = "black") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_packing_svg(packing, width, stroke=stroke), encoding="utf-8")
    log.info(f"Rendered {len(packing)} elements to '{path}'")
    return path
