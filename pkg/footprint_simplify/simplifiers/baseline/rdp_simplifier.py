"""
Ramer-Douglas-Peucker simplification, the vertex-restricted baseline.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from footprint_simplify.constants import Orientation, SimplifierMethodEnum
from footprint_simplify.exceptions import ParameterOutOfRange, TooFewPoints
from footprint_simplify.geometry.primitives import Point, Segment, point_segment_distance
from footprint_simplify.geometry.ring import (
    PointLike,
    Ring,
    as_point,
    ring_area_and_orientation,
)
from footprint_simplify.simplifiers.base import RingSimplifierBase, SimplifyReport, SimplifyResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RdpParams:
    tolerance: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tolerance) and self.tolerance >= 0):
            raise ParameterOutOfRange(
                f"tolerance must be a finite number >= 0, got {self.tolerance}"
            )


def _kept_indices(points: Sequence[Point], tolerance: float) -> list[int]:
    keep = [False] * len(points)
    keep[0] = keep[-1] = True
    stack = [(0, len(points) - 1)]
    while stack:
        first, last = stack.pop()
        chord = Segment(points[first], points[last])
        farthest, distance = -1, -1.0
        for index in range(first + 1, last):
            candidate = point_segment_distance(chord, points[index])
            if candidate > distance:
                farthest, distance = index, candidate
        if farthest < 0 or distance < tolerance:
            continue
        keep[farthest] = True
        stack.append((farthest, last))
        stack.append((first, farthest))
    return [index for index, kept in enumerate(keep) if kept]


def rdp_polyline(points: Sequence[PointLike], params: RdpParams) -> list[Point]:
    """
    Simplify an open polyline.

    The farthest point from each chord is kept, and the chord split there, when its
    distance is at least the tolerance. Endpoints are always kept, and the result is
    a subsequence of the input.

    Raises:
        TooFewPoints: if fewer than two points are given.
    """
    converted = [as_point(point) for point in points]
    if len(converted) < 2:
        raise TooFewPoints(f"A polyline needs at least 2 points, got {len(converted)}")
    return [converted[index] for index in _kept_indices(converted, params.tolerance)]


def rdp_ring(ring: Ring, params: RdpParams) -> Optional[Ring]:
    """
    Simplify a closed ring by splitting it at its head and at the vertex farthest from
    the head. Returns None when fewer than three vertices, or no area, remain.
    """
    vertices = list(ring.vertices())
    points = [vertex.point for vertex in vertices]
    head = points[0]
    farthest = max(range(len(points)), key=lambda index: head.distance_to(points[index]))
    if farthest == 0:
        return None

    first_half = list(range(0, farthest + 1))
    second_half = list(range(farthest, len(points))) + [0]
    kept: list[int] = []
    for half in (first_half, second_half):
        indices = _kept_indices([points[index] for index in half], params.tolerance)
        kept.extend(half[index] for index in indices[:-1])

    if len(kept) < 3:
        return None
    kept_points = [points[index] for index in kept]
    _, orientation = ring_area_and_orientation(kept_points)
    if orientation is Orientation.DEGENERATE:
        return None
    return Ring(
        kept_points,
        was_clockwise=ring.was_clockwise,
        orders=[vertices[index].order for index in kept],
    )


class RdpSimplifier(RingSimplifierBase):
    """
    Ring simplifier wrapping `rdp_ring`.

    Example:

        >>> RdpSimplifier(RdpParams(tolerance=1.5)).simplify_points(
        ...     [(0, 0), (4, 0), (4, 1), (6, 1), (6, 0), (10, 0), (10, 10), (0, 10)]
        ... ).ring
        Ring([(0, 0), (10, 0), (10, 10), (0, 10)])
    """

    method = SimplifierMethodEnum.RDP

    def __init__(self, params: RdpParams):
        self.params = params

    def simplify_ring(self, ring: Ring) -> SimplifyResult:
        simplified = rdp_ring(ring, self.params)
        report = SimplifyReport(initial_vertices=len(ring))
        if simplified is None:
            report.vanished = True
        else:
            report.final_vertices = len(simplified)
            report.remove_middle_points = len(ring) - len(simplified)
        logger.debug(
            "RDP reduced ring from %d to %d vertices",
            report.initial_vertices,
            report.final_vertices,
        )
        return SimplifyResult(simplified, report)
