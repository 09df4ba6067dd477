"""
Shared fixture corpus and strategies.
"""

import math
import random
from typing import List, Sequence, Tuple

import pytest
from hypothesis import strategies as st

from footprint_simplify.geometry.ring import PolygonRings, ring_from_points

Coordinates = List[Tuple[float, float]]

SQUARE: Coordinates = [(0, 0), (10, 0), (10, 10), (0, 10)]
NOTCH: Coordinates = [(0, 0), (4, 0), (4, 1), (6, 1), (6, 0), (10, 0), (10, 10), (0, 10)]
OFFSET: Coordinates = [(0, 0), (4, 0), (4, 1), (10, 1), (10, 10), (0, 10)]
NEEDLE: Coordinates = [(0, 0), (10, 0), (10, 0.5)]
STAIRCASE: Coordinates = [
    (0, 0),
    (10, 0),
    (10, 10),
    (8, 10),
    (8, 9),
    (6, 9),
    (6, 8),
    (4, 8),
    (4, 7),
    (2, 7),
    (2, 6),
    (0, 6),
]


def skyline(widths: Sequence[float], heights: Sequence[float]) -> Coordinates:
    """
    Counterclockwise rectilinear ring over a flat base: one column per width, with
    adjacent heights distinct. Has 2 + 2 * len(widths) vertices.
    """
    edges = [0.0]
    for width in widths:
        edges.append(edges[-1] + width)
    points: Coordinates = [(0.0, 0.0), (edges[-1], 0.0)]
    for column in range(len(widths) - 1, -1, -1):
        points.append((edges[column + 1], heights[column]))
        points.append((edges[column], heights[column]))
    return points


def _distinct_neighbours(heights: List[float], step: float) -> List[float]:
    adjusted = [heights[0]]
    for height in heights[1:]:
        adjusted.append(height + step if height == adjusted[-1] else height)
    return adjusted


def corridor_points(seed: int = 7, columns: int = 49) -> Coordinates:
    """A seeded skyline of about 100 vertices with feature sizes from 0.5 to 5 units."""
    rng = random.Random(seed)
    widths = [rng.choice([0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0]) for _ in range(columns)]
    offsets = [-5.0, -3.0, -1.5, -0.5, 0.5, 1.5, 3.0, 5.0]
    heights = [20.0 + rng.choice(offsets) for _ in range(columns)]
    return skyline(widths, _distinct_neighbours(heights, 0.5))


@st.composite
def rectilinear_rings(draw, min_columns: int = 4, max_columns: int = 99) -> Coordinates:
    """Random axis-aligned skyline rings with 10 to 200 vertices on a half-unit grid."""
    columns = draw(st.integers(min_value=min_columns, max_value=max_columns))
    widths = draw(st.lists(st.integers(1, 10), min_size=columns, max_size=columns))
    heights = draw(st.lists(st.integers(2, 40), min_size=columns, max_size=columns))
    return skyline(
        [width * 0.5 for width in widths],
        _distinct_neighbours([height * 0.5 for height in heights], 0.5),
    )


def median_edge(points: Coordinates) -> float:
    ring = ring_from_points(points)
    lengths = sorted(segment.length for segment in ring.segments())
    return lengths[len(lengths) // 2]


def same_cycle(actual: Sequence, expected: Sequence, tolerance: float = 1e-9) -> bool:
    """Whether two vertex lists describe the same cycle up to rotation."""
    actual = [tuple(map(float, point)) for point in actual]
    expected = [tuple(map(float, point)) for point in expected]
    if len(actual) != len(expected):
        return False
    for shift in range(len(actual)):
        rotated = actual[shift:] + actual[:shift]
        if all(
            abs(a[0] - b[0]) <= tolerance and abs(a[1] - b[1]) <= tolerance
            for a, b in zip(rotated, expected)
        ):
            return True
    return False


@pytest.fixture
def square():
    return ring_from_points(SQUARE)


@pytest.fixture
def notch():
    return ring_from_points(NOTCH)


@pytest.fixture
def offset():
    return ring_from_points(OFFSET)


@pytest.fixture
def needle():
    return ring_from_points(NEEDLE)


@pytest.fixture
def staircase():
    return ring_from_points(STAIRCASE)


@pytest.fixture
def corridor():
    return ring_from_points(corridor_points())


@pytest.fixture
def square_with_hole():
    return PolygonRings(
        ring_from_points([(0, 0), (30, 0), (30, 30), (0, 30)]),
        [ring_from_points([(10, 10), (10, 20), (20, 20), (20, 10)])],
    )


@pytest.fixture
def square_with_thin_hole():
    return PolygonRings(
        ring_from_points([(0, 0), (30, 0), (30, 30), (0, 30)]),
        [ring_from_points([(5, 10), (5, 10.5), (25, 10.5), (25, 10)])],
    )


@st.composite
def star_rings(draw, min_vertices: int = 4, max_vertices: int = 30, radius: float = 10.0):
    """
    Random simple counterclockwise rings, star-shaped around a random center: one vertex
    per equal angular sector, so consecutive vertices are less than π apart around it.
    """
    count = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    sector = 2.0 * math.pi / count
    jitters = draw(st.lists(st.floats(0.0, 0.9), min_size=count, max_size=count))
    radii = draw(st.lists(st.floats(0.25, 1.0), min_size=count, max_size=count))
    center_x = draw(st.floats(-1e3, 1e3))
    center_y = draw(st.floats(-1e3, 1e3))
    return [
        (
            center_x + radius * length * math.cos((index + jitter) * sector),
            center_y + radius * length * math.sin((index + jitter) * sector),
        )
        for index, (jitter, length) in enumerate(zip(jitters, radii))
    ]
