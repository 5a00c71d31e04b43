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

class KleinianPackingException(Exception):
    """Base exception for kleinian-packing errors"""
    pass

class ConfigError(KleinianPackingException):
    """Raised when experiment config cannot be loaded or fails the schema"""
    pass

class InvalidRegion(ConfigError):
    """Raised when a region description is malformed or unbounded where it must be bounded"""
    pass

class DescartesViolation(KleinianPackingException):
    """Raised when a quadruple does not satisfy the Descartes relations"""
    pass

class SchottkyConfigurationError(KleinianPackingException):
    """Raised when Schottky disks overlap, touch or are degenerate"""
    pass

class InvalidPresentation(KleinianPackingException):
    """Raised when a group presentation has a bad generator"""
    pass

class UnderEnumerated(KleinianPackingException):
    """Raised when a packing was enumerated to a curvature bound below the requested one"""
    def __init__(self, requested, available):
        self.requested = requested
        self.available = available
        super().__init__(
            f"Packing is enumerated up to curvature {available:g}, " \
            f"but T = {requested:g} was requested. " \
            f"Regenerate the packing with '--tmax {requested:g}' (or larger)"
        )

class InsufficientData(KleinianPackingException):
    """Raised when a fit has not enough usable samples"""
    pass

class EmptySupport(KleinianPackingException):
    """Raised when a measure would have no mass"""
    pass

class GridMismatch(KleinianPackingException):
    """Raised when two measure grids are compared with different layouts"""
    pass

class ParseError(KleinianPackingException):
    """Raised when an artifact file cannot be parsed"""
    def __init__(self, msg, row=None):
        self.row = row
        if row is not None:
            msg = f"row {row}: {msg}"
        super().__init__(msg)

class PackingParseError(ParseError):
    """Raised when a packing CSV cannot be parsed"""
    pass

class SeriesParseError(ParseError):
    """Raised when a count series or measure grid CSV cannot be parsed"""
    pass
