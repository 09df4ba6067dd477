"""
Value-level 2D primitives: points, segments, lines, angles and distances.

All functions here are pure; ring mutation lives in the simplifiers.
"""

import math
from dataclasses import dataclass
from typing import NewType, Optional

from footprint_simplify.constants import PARALLEL_RATIO, SPIKE_ANGLE
from footprint_simplify.exceptions import (
    DegenerateSegment,
    InvalidCoordinate,
    ParameterOutOfRange,
)

TWO_PI = 2.0 * math.pi

# Absolute bearing of a segment in [0, 2π)
DirectionAngle = NewType("DirectionAngle", float)
# Angle on the interior (left) side of counterclockwise travel, in (0, 2π)
InteriorAngle = NewType("InteriorAngle", float)


@dataclass(frozen=True)
class Point:
    """
    A coordinate pair in map units. Also used as a 2D vector.

    Example:

        >>> Point(4, 1) - Point(4, 0)
        Point(x=0.0, y=1.0)
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        x = float(self.x)
        y = float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidCoordinate(f"Coordinates must be finite, got ({self.x}, {self.y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, factor: float) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    @property
    def vector(self) -> Point:
        return self.end - self.start

    @property
    def length(self) -> float:
        return self.start.distance_to(self.end)


@dataclass(frozen=True)
class Line:
    """An infinite line through `point` along `direction`."""

    point: Point
    direction: Point

    @classmethod
    def through(cls, segment: Segment) -> "Line":
        return cls(segment.start, segment.vector)


def _magnitude(*points: Point) -> float:
    return max([1.0] + [max(abs(p.x), abs(p.y)) for p in points])


def direction_angle(segment: Segment) -> DirectionAngle:
    """Bearing of `segment.end - segment.start` in [0, 2π)."""
    vector = segment.vector
    if vector.norm() <= PARALLEL_RATIO * _magnitude(segment.start, segment.end):
        raise DegenerateSegment(f"Segment {segment} has no direction")
    angle = math.atan2(vector.y, vector.x) % TWO_PI
    if angle >= TWO_PI:
        angle = 0.0
    return DirectionAngle(angle)


def regression_angle(first: float, second: float, ratio: float) -> float:
    """
    Weighted orientation of the line regressing two segments.

    `first` and `second` are direction angles; they are reduced to line orientations
    (modulo π) and interpolated along the shorter arc, `first` weighted by `ratio`
    and `second` by `1 - ratio`.
    """
    if not 0.0 <= ratio <= 1.0:
        raise ParameterOutOfRange(f"ratio must lie in [0, 1], got {ratio}")
    start = first % math.pi
    end = second % math.pi
    delta = (end - start + math.pi / 2) % math.pi - math.pi / 2
    return start + (1.0 - ratio) * delta


def turn_angle(before: Point, vertex: Point, after: Point) -> float:
    """Signed turn from the incoming to the outgoing direction, in [-π, π]."""
    incoming = vertex - before
    outgoing = after - vertex
    return math.atan2(incoming.cross(outgoing), incoming.dot(outgoing))


def interior_angle_at(before: Point, vertex: Point, after: Point) -> InteriorAngle:
    """Interior angle at `vertex` of a counterclockwise boundary, in [0, 2π]."""
    return InteriorAngle(math.pi - turn_angle(before, vertex, after))


def is_spike(angle: float) -> bool:
    return angle < SPIKE_ANGLE or angle > TWO_PI - SPIKE_ANGLE


def angle_difference(a: float, b: float) -> float:
    """Circular difference of two angles, always in [0, π]."""
    difference = abs(a - b) % TWO_PI
    return min(difference, TWO_PI - difference)


def point_along(segment: Segment, ratio: float) -> Point:
    """The point at `ratio * length` from the segment's start."""
    if not 0.0 <= ratio <= 1.0:
        raise ParameterOutOfRange(f"ratio must lie in [0, 1], got {ratio}")
    if ratio == 0.0:
        return segment.start
    if ratio == 1.0:
        return segment.end
    return segment.start + segment.vector.scaled(ratio)


def line_intersection(first: Line, second: Line) -> Optional[Point]:
    """
    Intersection of two supporting lines.

    Returns None when the lines are parallel, i.e. when
    |cross(d1, d2)| <= 1e-12 * |d1| * |d2|. The result is anchored on `first`, so
    points on an axis-aligned `first` line keep that axis coordinate exactly.
    """
    denominator = first.direction.cross(second.direction)
    scale = first.direction.norm() * second.direction.norm()
    if scale == 0.0 or abs(denominator) <= PARALLEL_RATIO * scale:
        return None
    t = (second.point - first.point).cross(second.direction) / denominator
    return first.point + first.direction.scaled(t)


def point_segment_distance(segment: Segment, point: Point) -> float:
    """Euclidean distance from `point` to the closed segment."""
    vector = segment.vector
    squared = vector.dot(vector)
    if squared == 0.0:
        return point.distance_to(segment.start)
    t = (point - segment.start).dot(vector) / squared
    if t <= 0.0:
        return point.distance_to(segment.start)
    if t >= 1.0:
        return point.distance_to(segment.end)
    return point.distance_to(segment.start + vector.scaled(t))
