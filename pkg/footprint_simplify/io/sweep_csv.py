"""
Tables of segment counts and errors over a range of distance thresholds.
"""

import csv
from dataclasses import astuple, dataclass
from typing import IO, Iterable, List

from footprint_simplify.constants import SWEEP_CSV_HEADER
from footprint_simplify.exceptions import IoError, ParseError
from footprint_simplify.io.numbers import format_number


@dataclass(frozen=True)
class SweepRow:
    tau: float
    segments: int
    vertices: int
    area: float
    hausdorff: float


def write_sweep_csv(rows: Iterable[SweepRow], sink: IO[str]) -> None:
    """
    Write the header `tau,segments,vertices,area,hausdorff` and one row per threshold.

    Rows must already be sorted by tau. Lines end in CRLF.

    Raises:
        ValueError: if the rows are not sorted by tau.
        IoError: if writing to the sink fails.
    """
    rows = list(rows)
    if any(later.tau < earlier.tau for earlier, later in zip(rows, rows[1:])):
        raise ValueError("Sweep rows must be sorted by tau")
    try:
        writer = csv.writer(sink)
        writer.writerow(SWEEP_CSV_HEADER)
        for row in rows:
            writer.writerow([format_number(value) for value in astuple(row)])
    except OSError as error:
        raise IoError(f"Could not write sweep table: {error}") from error


def read_sweep_csv(source: IO[str]) -> List[SweepRow]:
    reader = csv.reader(source)
    header = next(reader, None)
    if header is None or tuple(header) != SWEEP_CSV_HEADER:
        raise ParseError(f"Expected header {','.join(SWEEP_CSV_HEADER)}, got {header}")
    rows = []
    for line_number, values in enumerate(reader, start=2):
        if not values:
            continue
        try:
            tau, segments, vertices, area, hausdorff = values
            rows.append(
                SweepRow(float(tau), int(segments), int(vertices), float(area), float(hausdorff))
            )
        except ValueError as error:
            raise ParseError(f"Invalid sweep row: {error}", line_number) from error
    return rows
