"""
Quality measures for comparing a ring with its simplification.
"""

import heapq
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Sequence

from footprint_simplify.constants import RIGHT_ANGLE_WINDOW
from footprint_simplify.geometry.primitives import (
    Point,
    Segment,
    interior_angle_at,
    point_segment_distance,
)
from footprint_simplify.geometry.ring import Ring, bounding_box, ring_area_and_orientation

# Relative precision of the Hausdorff search, scaled by 1 + the combined diagonal
HAUSDORFF_PRECISION = 1e-12


@dataclass
class QualityReport:
    segment_count_before: int
    segment_count_after: int
    area_before: float
    area_after: float
    hausdorff: float
    right_angle_fraction_before: float
    right_angle_fraction_after: float
    vanished: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _distance_to_boundary(point: Point, segments: Sequence[Segment]) -> float:
    return min(point_segment_distance(segment, point) for segment in segments)


def _interval_bound(first: Point, second: Point, segments: Sequence[Segment]) -> float:
    # Distance to a segment is convex along a line, so its maximum over [first, second]
    # is attained at an end.
    return min(
        max(point_segment_distance(segment, first), point_segment_distance(segment, second))
        for segment in segments
    )


def _directed_hausdorff(source: Ring, target: Ring, tolerance: float) -> float:
    targets = target.segments()
    best = max(_distance_to_boundary(point, targets) for point in source.points())

    for segment in source.segments():
        start, end = segment.start, segment.end
        heap = [(-_interval_bound(start, end, targets), 0.0, 1.0, start, end)]
        while heap:
            negative_bound, low, high, first, second = heapq.heappop(heap)
            if -negative_bound <= best + tolerance:
                break
            if first.distance_to(second) <= tolerance:
                continue
            middle_ratio = (low + high) / 2.0
            middle = start + segment.vector.scaled(middle_ratio)
            best = max(best, _distance_to_boundary(middle, targets))
            halves = (
                (low, middle_ratio, first, middle),
                (middle_ratio, high, middle, second),
            )
            for half_low, half_high, half_start, half_end in halves:
                bound = _interval_bound(half_start, half_end, targets)
                if bound > best + tolerance:
                    heapq.heappush(heap, (-bound, half_low, half_high, half_start, half_end))
    return best


def hausdorff_distance(a: Ring, b: Ring) -> float:
    """
    Symmetric Hausdorff distance between the boundaries of two rings.

    Each directed distance is searched segment by segment with branch-and-bound over
    sub-intervals, so the result is exact up to a relative precision of 1e-12.

    Example:

        >>> square = ring_from_points([(0, 0), (10, 0), (10, 10), (0, 10)])
        >>> shifted = ring_from_points([(1, 0), (11, 0), (11, 10), (1, 10)])
        >>> hausdorff_distance(square, shifted)
        1.0
    """
    min_x, min_y, max_x, max_y = bounding_box(a.points() + b.points())
    tolerance = HAUSDORFF_PRECISION * (1.0 + math.hypot(max_x - min_x, max_y - min_y))
    return max(_directed_hausdorff(a, b, tolerance), _directed_hausdorff(b, a, tolerance))


def right_angle_fraction(ring: Optional[Ring]) -> float:
    """Share of vertices whose interior angle is within 5° of π/2 or 3π/2."""
    if ring is None or len(ring) == 0:
        return 0.0
    right_angles = 0
    for vertex in ring.vertices():
        angle = interior_angle_at(vertex.prev.point, vertex.point, vertex.next.point)
        if min(abs(angle - math.pi / 2), abs(angle - 3 * math.pi / 2)) <= RIGHT_ANGLE_WINDOW:
            right_angles += 1
    return right_angles / len(ring)


def area_centroid(ring: Ring) -> Point:
    points = ring.points()
    origin = points[0]
    twice_area = 0.0
    sum_x = 0.0
    sum_y = 0.0
    for index, current in enumerate(points):
        first = current - origin
        second = points[(index + 1) % len(points)] - origin
        cross = first.cross(second)
        twice_area += cross
        sum_x += (first.x + second.x) * cross
        sum_y += (first.y + second.y) * cross
    if twice_area == 0.0:
        return Point(
            sum(p.x for p in points) / len(points), sum(p.y for p in points) / len(points)
        )
    return origin + Point(sum_x / (3.0 * twice_area), sum_y / (3.0 * twice_area))


def quality_report(before: Ring, after: Optional[Ring]) -> QualityReport:
    """
    Compare a ring with its simplification.

    When the simplification vanished, the after-side counts and area are zero and the
    Hausdorff distance is the largest distance from the original boundary to its own
    centroid.
    """
    area_before, _ = ring_area_and_orientation(before)
    fraction_before = right_angle_fraction(before)
    if after is None:
        centroid = area_centroid(before)
        return QualityReport(
            segment_count_before=len(before),
            segment_count_after=0,
            area_before=area_before,
            area_after=0.0,
            hausdorff=max(centroid.distance_to(point) for point in before.points()),
            right_angle_fraction_before=fraction_before,
            right_angle_fraction_after=0.0,
            vanished=True,
        )
    area_after, _ = ring_area_and_orientation(after)
    return QualityReport(
        segment_count_before=len(before),
        segment_count_after=len(after),
        area_before=area_before,
        area_after=area_after,
        hausdorff=hausdorff_distance(before, after),
        right_angle_fraction_before=fraction_before,
        right_angle_fraction_after=right_angle_fraction(after),
    )
