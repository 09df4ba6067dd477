"""
Well-known text reader and writer for polygons.

Only areal geometries are returned. POINT and LINESTRING geometries and their MULTI forms
are skipped and counted, so a mixed file can still be simplified.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from footprint_simplify.exceptions import ParseError
from footprint_simplify.geometry.primitives import Point
from footprint_simplify.io.numbers import format_number

logger = logging.getLogger(__name__)

# Raw coordinates of one polygon: rings of (x, y) pairs, exterior first
RawPolygon = list[list[tuple[float, float]]]

TOKEN_PATTERN = re.compile(
    r"""
    (?P<number>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)
    |(?P<word>[A-Za-z]+)
    |(?P<open>\()
    |(?P<close>\))
    |(?P<comma>,)
    |(?P<newline>\n)
    |(?P<space>[ \t\r;]+)
    """,
    re.VERBOSE,
)

AREAL_TYPES = ("POLYGON", "MULTIPOLYGON", "GEOMETRYCOLLECTION")
SKIPPED_TYPES = ("POINT", "LINESTRING", "MULTIPOINT", "MULTILINESTRING", "TRIANGLE")
DIMENSION_TAGS = {"Z": 3, "M": 3, "ZM": 4}
MAX_ORDINATES = 4


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    offset: int


def tokenize(text: str) -> Iterator[Token]:
    """
    Split WKT text into tokens, tracking the line and the offset within the line.

    Raises:
        ParseError: on any character that cannot start a token.
    """
    line, line_start, position = 1, 0, 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ParseError(
                f"Unexpected character {text[position]!r}", line, position - line_start
            )
        kind = match.lastgroup or ""
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind != "space":
            yield Token(kind, match.group(), line, position - line_start)
        position = match.end()


@dataclass
class WktDocument:
    polygons: list[RawPolygon] = field(default_factory=list)
    # Index of the top-level geometry each polygon came from, and its part number
    sources: list[tuple[int, Optional[int]]] = field(default_factory=list)
    skipped_count: int = 0


class WktParser:
    """Recursive-descent parser over the token stream of a WKT document."""

    def __init__(self, text: str):
        self._tokens = list(tokenize(text))
        self._position = 0
        # Ordinates per position of the geometry being read, fixed by its tag or first position
        self._ordinates: Optional[int] = None
        self._end_line = text.count("\n") + 1
        self._end_offset = len(text) - (text.rfind("\n") + 1)

    def parse(self) -> WktDocument:
        document = WktDocument()
        geometry_index = 0
        while self._peek() is not None:
            polygons, multi = self._geometry(document)
            for part, polygon in enumerate(polygons):
                document.polygons.append(polygon)
                document.sources.append((geometry_index, part if multi else None))
            geometry_index += 1
        return document

    def _peek(self) -> Optional[Token]:
        if self._position < len(self._tokens):
            return self._tokens[self._position]
        return None

    def _error(self, message: str, token: Optional[Token]) -> ParseError:
        if token is None:
            return ParseError(f"{message}, found end of input", self._end_line, self._end_offset)
        return ParseError(f"{message}, found {token.text!r}", token.line, token.offset)

    def _expect(self, kind: str, description: str) -> Token:
        token = self._peek()
        if token is None or token.kind != kind:
            raise self._error(f"Expected {description}", token)
        self._position += 1
        return token

    def _accept(self, kind: str) -> bool:
        token = self._peek()
        if token is not None and token.kind == kind:
            self._position += 1
            return True
        return False

    def _geometry(self, document: WktDocument) -> tuple[list[RawPolygon], bool]:
        keyword = self._expect("word", "a geometry type")
        geometry_type = keyword.text.upper()
        if geometry_type not in AREAL_TYPES + SKIPPED_TYPES:
            raise self._error("Unknown geometry type", keyword)

        self._ordinates = None
        token = self._peek()
        if token is not None and token.kind == "word" and token.text.upper() in DIMENSION_TAGS:
            self._ordinates = DIMENSION_TAGS[token.text.upper()]
            self._position += 1
        token = self._peek()
        if token is not None and token.kind == "word" and token.text.upper() == "EMPTY":
            self._position += 1
            return [], geometry_type != "POLYGON"

        if geometry_type in SKIPPED_TYPES:
            self._skip_body()
            document.skipped_count += 1
            logger.warning(
                "Skipping non-areal %s at line %d", geometry_type, keyword.line
            )
            return [], False
        if geometry_type == "POLYGON":
            return [self._polygon_body()], False
        if geometry_type == "MULTIPOLYGON":
            return self._multipolygon_body(), True
        return self._collection_body(document), True

    def _skip_body(self) -> None:
        self._expect("open", "'('")
        depth = 1
        while depth:
            token = self._peek()
            if token is None:
                raise self._error("Unbalanced parentheses", token)
            if token.kind == "word":
                raise self._error("Expected coordinates", token)
            self._position += 1
            depth += {"open": 1, "close": -1}.get(token.kind, 0)

    def _collection_body(self, document: WktDocument) -> list[RawPolygon]:
        self._expect("open", "'('")
        polygons: list[RawPolygon] = []
        while True:
            members, _ = self._geometry(document)
            polygons.extend(members)
            if not self._accept("comma"):
                break
        self._expect("close", "')'")
        return polygons

    def _multipolygon_body(self) -> list[RawPolygon]:
        self._expect("open", "'('")
        polygons = [self._polygon_body()]
        while self._accept("comma"):
            polygons.append(self._polygon_body())
        self._expect("close", "')'")
        return polygons

    def _polygon_body(self) -> RawPolygon:
        self._expect("open", "'('")
        rings = [self._ring()]
        while self._accept("comma"):
            rings.append(self._ring())
        self._expect("close", "')'")
        return rings

    def _ring(self) -> list[tuple[float, float]]:
        opening = self._expect("open", "'('")
        positions = [self._position_values()]
        while self._accept("comma"):
            positions.append(self._position_values())
        self._expect("close", "')'")
        if len(positions) < 3:
            raise ParseError(
                f"A polygon ring needs at least 3 positions, got {len(positions)}",
                opening.line,
                opening.offset,
            )
        return positions

    def _position_values(self) -> tuple[float, float]:
        """
        Read one position. Untagged geometries take their ordinate count (2 to 4) from
        their first position; every later position must match it.
        """
        limit = self._ordinates or MAX_ORDINATES
        values: list[float] = []
        while len(values) < limit:
            token = self._peek()
            if token is None or token.kind != "number":
                break
            values.append(float(token.text))
            self._position += 1

        token = self._peek()
        if token is not None and token.kind == "number":
            raise self._error(f"Expected ',' or ')' after {limit} ordinates", token)
        if self._ordinates is None:
            if len(values) < 2:
                raise self._error("Expected a coordinate position", token)
            self._ordinates = len(values)
        elif len(values) != self._ordinates:
            raise self._error(f"Expected {self._ordinates} ordinates per position", token)
        return values[0], values[1]


def parse_wkt(text: str) -> WktDocument:
    """
    Parse every geometry of a WKT document, one or more per line.

    Raises:
        ParseError: with the line and offset of the offending token.
    """
    return WktParser(text).parse()


def _ring_text(points: Sequence[Point]) -> str:
    closed = list(points) + [points[0]]
    return "(" + ", ".join(f"{format_number(p.x)} {format_number(p.y)}" for p in closed) + ")"


def format_polygon(rings: Sequence[Sequence[Point]]) -> str:
    """
    Example:

        >>> format_polygon([[Point(0, 0), Point(10, 0), Point(10, 10), Point(0, 10)]])
        'POLYGON ((0 0, 10 0, 10 10, 0 10, 0 0))'
    """
    return "POLYGON (" + ", ".join(_ring_text(ring) for ring in rings) + ")"
