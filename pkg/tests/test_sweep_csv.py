"""
Tests for sweep tables.
"""

import io

import pytest

from footprint_simplify.exceptions import ParseError
from footprint_simplify.io.sweep_csv import SweepRow, read_sweep_csv, write_sweep_csv

ROWS = [
    SweepRow(tau=1.0, segments=8, vertices=8, area=98.0, hausdorff=0.0),
    SweepRow(tau=2.0, segments=4, vertices=4, area=100.0, hausdorff=1.0),
    SweepRow(tau=2.5, segments=4, vertices=4, area=100.0, hausdorff=1.25),
]


def written(rows):
    sink = io.StringIO(newline="")
    write_sweep_csv(rows, sink)
    return sink.getvalue()


class TestWriteSweepCsv:
    """Test cases for write_sweep_csv."""

    def test_layout(self):
        """Test the header and rows end in CRLF and integral values print bare."""
        assert written(ROWS) == (
            "tau,segments,vertices,area,hausdorff\r\n"
            "1,8,8,98,0\r\n"
            "2,4,4,100,1\r\n"
            "2.5,4,4,100,1.25\r\n"
        )

    def test_header_only(self):
        """Test an empty sweep still writes its header."""
        assert written([]) == "tau,segments,vertices,area,hausdorff\r\n"

    def test_unsorted_rows(self):
        """Test rows out of tau order are rejected."""
        with pytest.raises(ValueError, match="sorted"):
            written(list(reversed(ROWS)))


class TestReadSweepCsv:
    """Test cases for read_sweep_csv."""

    def test_reads_written_table(self):
        """Test a written table reads back to the same rows."""
        assert read_sweep_csv(io.StringIO(written(ROWS), newline="")) == ROWS

    @pytest.mark.parametrize("text", ["", "tau,segments,area\r\n1,2,3\r\n"])
    def test_bad_header(self, text):
        """Test a missing or different header raises ParseError."""
        with pytest.raises(ParseError, match="Expected header"):
            read_sweep_csv(io.StringIO(text))

    def test_bad_row_reports_line(self):
        """Test an unreadable row names its line."""
        text = "tau,segments,vertices,area,hausdorff\r\n1,8,8,98,0\r\n2,four,4,100,1\r\n"
        with pytest.raises(ParseError) as error:
            read_sweep_csv(io.StringIO(text, newline=""))
        assert error.value.line == 3
