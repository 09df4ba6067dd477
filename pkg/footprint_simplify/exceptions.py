"""
Error hierarchy shared by the geometry core, the simplifiers and the readers/writers.
"""

from typing import Optional


class FootprintSimplifyError(Exception):
    """Root of all errors raised by footprint_simplify."""


class GeometryError(FootprintSimplifyError, ValueError):
    """A geometric precondition does not hold."""


class DegenerateRing(GeometryError):
    """Fewer than three distinct vertices remain after normalization."""


class InvalidCoordinate(GeometryError):
    """A coordinate is NaN or infinite."""


class DegenerateSegment(GeometryError):
    """A segment is too short to define a direction."""


class SpikeAngle(GeometryError):
    """The interior angle at a vertex collapsed to a spike (0 or 2π)."""

    def __init__(self, message: str, vertex_index: Optional[int] = None):
        super().__init__(message)
        self.vertex_index = vertex_index


class ParameterOutOfRange(FootprintSimplifyError, ValueError):
    """A threshold or interpolation parameter is outside its valid range."""


class TooFewPoints(FootprintSimplifyError, ValueError):
    """A polyline has fewer points than the operation requires."""


class ParseError(FootprintSimplifyError, ValueError):
    """Malformed GeoJSON or WKT input."""

    def __init__(self, message: str, line: int = 1, offset: int = 0):
        super().__init__(f"{message} (line {line}, offset {offset})")
        self.message = message
        self.line = line
        self.offset = offset


class IoError(FootprintSimplifyError, OSError):
    """Reading from a source or writing to a sink failed."""


class NothingToRender(FootprintSimplifyError, ValueError):
    """An SVG was requested for an empty record list."""


class UnserializableValue(FootprintSimplifyError, ValueError):
    """A record carries a value the output format cannot represent, such as NaN."""
