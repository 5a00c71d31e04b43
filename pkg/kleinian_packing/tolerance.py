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

# Every numeric tolerance used by the package, in one place.

# Algebraic identities (determinants, discriminants, cocycles)
ALGEBRAIC_TOL = 1e-12

# Involution check g^2 = +-identity
INVOLUTION_TOL = 1e-10

# Descartes relation, absolute
DESCARTES_TOL = 1e-9

# Schottky disks closer than this are considered tangent
TANGENCY_TOL = 1e-9

# Quantization step of canonical circle keys
DEDUP_GRID = 1e-7

# Quantization step of canonical group element / orbit point keys
ELEMENT_GRID = 1e-9

# A circle whose discriminant is within this relative distance of 1 is left
# unscaled; the relative scale is |b|^2 + |ac|
NORMALIZED_TOL = 1e-10

# Below this |a| a normalized circle is treated as a line
LINE_EPS = 1e-14

# Normalized measure grids must sum to one within this
MASS_TOL = 1e-12
