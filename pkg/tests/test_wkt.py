"""
Tests for the WKT reader and writer.
"""

import pytest

from footprint_simplify.exceptions import ParseError
from footprint_simplify.geometry.primitives import Point
from footprint_simplify.io.numbers import format_number, json_number
from footprint_simplify.io.wkt import format_polygon, parse_wkt, tokenize

SQUARE_WKT = "POLYGON ((0 0, 10 0, 10 10, 0 10, 0 0))"


class TestTokenize:
    """Test cases for tokenize."""

    def test_tracks_lines_and_offsets(self):
        """Test tokens carry their line and offset within the line."""
        tokens = list(tokenize("POINT (1 2)\nPOLYGON"))
        assert [(token.kind, token.text) for token in tokens] == [
            ("word", "POINT"),
            ("open", "("),
            ("number", "1"),
            ("number", "2"),
            ("close", ")"),
            ("word", "POLYGON"),
        ]
        assert (tokens[-1].line, tokens[-1].offset) == (2, 0)
        assert tokens[2].offset == 7

    def test_number_forms(self):
        """Test signs, fractions and exponents are single tokens."""
        texts = [token.text for token in tokenize("-1.5 +.25 3e-2 7.")]
        assert texts == ["-1.5", "+.25", "3e-2", "7."]


class TestParseWkt:
    """Test cases for parse_wkt."""

    def test_polygon(self):
        """Test a single polygon keeps its positions as written."""
        document = parse_wkt(SQUARE_WKT)
        assert document.polygons == [[[(0, 0), (10, 0), (10, 10), (0, 10), (0, 0)]]]
        assert document.sources == [(0, None)]
        assert document.skipped_count == 0

    def test_polygon_with_hole_is_case_insensitive(self):
        """Test lower-case keywords and interior rings."""
        document = parse_wkt(
            "polygon ((0 0, 30 0, 30 30, 0 30, 0 0), (10 10, 10 20, 20 20, 20 10, 10 10))"
        )
        assert len(document.polygons[0]) == 2

    def test_multipolygon_parts(self):
        """Test each part of a multipolygon is numbered."""
        document = parse_wkt(
            "MULTIPOLYGON (((0 0, 1 0, 1 1, 0 0)), ((5 5, 6 5, 6 6, 5 5)))\n" + SQUARE_WKT
        )
        assert len(document.polygons) == 3
        assert document.sources == [(0, 0), (0, 1), (1, None)]

    def test_dimension_tags(self):
        """Test Z coordinates are accepted and dropped."""
        document = parse_wkt("POLYGON Z ((0 0 1, 1 0 1, 1 1 2, 0 0 1))")
        assert document.polygons[0][0][2] == (1.0, 1.0)

    def test_non_areal_geometries_are_skipped(self, caplog):
        """Test points and lines are counted, logged and left out."""
        document = parse_wkt("POINT (1 2)\nLINESTRING (0 0, 1 1)\n" + SQUARE_WKT)
        assert len(document.polygons) == 1
        assert document.sources == [(2, None)]
        assert document.skipped_count == 2
        assert "Skipping non-areal POINT" in caplog.text

    def test_geometry_collection(self):
        """Test areal members of a collection are kept as parts."""
        document = parse_wkt("GEOMETRYCOLLECTION (POINT (1 2), " + SQUARE_WKT + ")")
        assert len(document.polygons) == 1
        assert document.sources == [(0, 0)]
        assert document.skipped_count == 1

    def test_empty_geometry(self):
        """Test EMPTY geometries contribute nothing."""
        assert parse_wkt("POLYGON EMPTY").polygons == []

    def test_blank_document(self):
        """Test whitespace alone is an empty document."""
        assert parse_wkt("  \n ").polygons == []

    @pytest.mark.parametrize(
        "text, line, offset",
        [
            ("POLYGON ((0 0, 1 x", 1, 17),
            ("POLYGON ((0 0, 1 0, 1 1))\nPOLYGON ((0 0, 1 0 @", 2, 19),
            ("CIRCLE (1 2)", 1, 0),
        ],
    )
    def test_errors_carry_position(self, text, line, offset):
        """Test malformed input reports where parsing stopped."""
        with pytest.raises(ParseError) as error:
            parse_wkt(text)
        assert (error.value.line, error.value.offset) == (line, offset)

    def test_unterminated_polygon(self):
        """Test running out of input is a parse error."""
        with pytest.raises(ParseError, match="end of input"):
            parse_wkt("POLYGON ((0 0, 10 0, 10 10, 0 0)")

    def test_short_ring(self):
        """Test rings need three positions."""
        with pytest.raises(ParseError, match="at least 3 positions"):
            parse_wkt("POLYGON ((0 0, 1 1))")

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("POLYGON ((0 0  10 0, 10 10, 0 10, 0 0))", 26),
            ("POLYGON ((0 0, 10 0, 10 10  0 10, 0 0))", 28),
            ("POLYGON ((0 0, 10 0 1, 10 10, 0 10, 0 0))", 20),
            ("POLYGON Z ((0 0 1, 10 0, 10 10 1, 0 0 1))", 23),
        ],
    )
    def test_missing_comma_between_positions(self, text, offset):
        """Test positions must all carry the ordinate count of the first one."""
        with pytest.raises(ParseError) as error:
            parse_wkt(text)
        assert error.value.offset == offset

    def test_untagged_three_dimensional_ring(self):
        """Test an untagged ring with a consistent third ordinate is accepted."""
        document = parse_wkt("POLYGON ((0 0 5, 10 0 5, 10 10 5, 0 0 5))")
        assert document.polygons[0][0] == [(0, 0), (10, 0), (10, 10), (0, 0)]

    def test_ordinate_count_is_per_geometry(self):
        """Test each geometry on a line fixes its own ordinate count."""
        document = parse_wkt("POLYGON ((0 0 1, 1 0 1, 1 1 1, 0 0 1))\n" + SQUARE_WKT)
        assert len(document.polygons) == 2


class TestFormatting:
    """Test cases for the writers' number and polygon formatting."""

    @pytest.mark.parametrize(
        "value, expected",
        [(10.0, "10"), (0.1, "0.1"), (-2.5e-07, "-2.5e-07"), (-0.0, "0"), (1e16, "1e+16")],
    )
    def test_format_number(self, value, expected):
        """Test integral values lose their fraction and others print shortest."""
        assert format_number(value) == expected

    def test_json_number(self):
        """Test integral floats become ints."""
        assert json_number(3.0) == 3 and isinstance(json_number(3.0), int)
        assert isinstance(json_number(3.5), float)

    def test_format_polygon_closes_rings(self):
        """Test every ring is written closed, exterior first."""
        square = [Point(0, 0), Point(10, 0), Point(10, 10), Point(0, 10)]
        hole = [Point(2, 2), Point(2, 4.5), Point(4, 4.5)]
        assert format_polygon([square, hole]) == (
            "POLYGON ((0 0, 10 0, 10 10, 0 10, 0 0), (2 2, 2 4.5, 4 4.5, 2 2))"
        )

    def test_written_text_parses_back(self):
        """Test the writer's output is accepted by the reader."""
        square = [Point(0, 0), Point(10, 0), Point(10, 10), Point(0, 10)]
        assert parse_wkt(format_polygon([square])).polygons == parse_wkt(SQUARE_WKT).polygons
