"""
Circular, mutable vertex rings and polygons built from them.
"""

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union
import math

from footprint_simplify.constants import AREA_RATIO, DEGENERACY_RATIO, Orientation
from footprint_simplify.exceptions import DegenerateRing, SpikeAngle
from footprint_simplify.geometry.primitives import (
    InteriorAngle,
    Point,
    Segment,
    interior_angle_at,
    is_spike,
)

PointLike = Union[Point, Sequence[float]]


class RingVertex:
    """
    A node of the circular doubly-linked vertex list.

    The vertex also identifies its outgoing segment (vertex -> vertex.next). `generation`
    is bumped whenever that segment is replaced, so queued references to the old
    segment can be recognised as stale. `order` is the vertex's position in the input and
    `rank` its position along the ring when the ring was built, so ranks increase from
    the head in traversal order.
    """

    __slots__ = ("point", "prev", "next", "generation", "alive", "order", "rank")

    def __init__(self, point: Point, order: int, rank: int = 0):
        self.point = point
        self.prev: "RingVertex" = self
        self.next: "RingVertex" = self
        self.generation = 0
        self.alive = True
        self.order = order
        self.rank = rank

    @property
    def segment(self) -> Segment:
        return Segment(self.point, self.next.point)

    def __repr__(self) -> str:
        return f"RingVertex({self.point.x}, {self.point.y}, order={self.order})"


class Ring:
    """
    A polygon boundary stored as a circular doubly-linked list, counterclockwise.

    `was_clockwise` records the orientation of the input so that writers can restore it.
    The ring keeps a running shoelace sum so edits can test for collapse in O(1).

    Example:

        >>> ring = Ring([Point(0, 0), Point(10, 0), Point(10, 10), Point(0, 10)])
        >>> ring.signed_area
        100.0
    """

    def __init__(
        self,
        points: Sequence[Point],
        was_clockwise: bool = False,
        orders: Optional[Sequence[int]] = None,
    ):
        if not points:
            raise DegenerateRing("A ring needs at least one vertex")
        if orders is None:
            orders = range(len(points))
        self.was_clockwise = was_clockwise
        nodes = [
            RingVertex(point, order, rank)
            for rank, (point, order) in enumerate(zip(points, orders))
        ]
        for index, node in enumerate(nodes):
            node.next = nodes[(index + 1) % len(nodes)]
            node.prev = nodes[index - 1]
        self.head = nodes[0]
        self._size = len(nodes)
        # Area terms are taken relative to the first input point to limit cancellation
        self._origin = points[0]
        self._twice_area = _shoelace(points, self._origin)

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[RingVertex]:
        return self.vertices()

    def __repr__(self) -> str:
        coordinates = ", ".join(f"({p.x:g}, {p.y:g})" for p in self.points())
        return f"Ring([{coordinates}])"

    def vertices(self) -> Iterator[RingVertex]:
        node = self.head
        for _ in range(self._size):
            yield node
            node = node.next

    def points(self) -> list[Point]:
        return [node.point for node in self.vertices()]

    def oriented_points(self) -> list[Point]:
        """
        Vertices in the orientation of the original input, starting at the surviving
        vertex that came first in the input.
        """
        nodes = list(self.vertices())
        if self.was_clockwise:
            nodes.reverse()
        start = min(range(len(nodes)), key=lambda index: nodes[index].order)
        return [node.point for node in nodes[start:] + nodes[:start]]

    def segments(self) -> list[Segment]:
        return [node.segment for node in self.vertices()]

    def vertex(self, index: int) -> RingVertex:
        node = self.head
        for _ in range(index % self._size):
            node = node.next
        return node

    @property
    def signed_area(self) -> float:
        return self._twice_area / 2.0

    def recompute_area(self) -> float:
        self._twice_area = _shoelace(self.points(), self._origin)
        return self.signed_area

    def bounding_box(self) -> tuple[float, float, float, float]:
        return bounding_box(self.points())

    def diagonal(self) -> float:
        min_x, min_y, max_x, max_y = self.bounding_box()
        return math.hypot(max_x - min_x, max_y - min_y)

    def _cross(self, first: Point, second: Point) -> float:
        return (first - self._origin).cross(second - self._origin)

    def move_vertex(self, node: RingVertex, point: Point) -> None:
        before, after = node.prev.point, node.next.point
        self._twice_area -= self._cross(before, node.point) + self._cross(node.point, after)
        self._twice_area += self._cross(before, point) + self._cross(point, after)
        node.point = point
        node.generation += 1
        node.prev.generation += 1

    def remove_vertex(self, node: RingVertex) -> None:
        before, after = node.prev, node.next
        self._twice_area -= self._cross(before.point, node.point)
        self._twice_area -= self._cross(node.point, after.point)
        self._twice_area += self._cross(before.point, after.point)
        before.next = after
        after.prev = before
        node.alive = False
        node.generation += 1
        before.generation += 1
        self._size -= 1
        if node is self.head:
            self.head = after

    def copy(self) -> "Ring":
        nodes = list(self.vertices())
        return Ring(
            [node.point for node in nodes],
            was_clockwise=self.was_clockwise,
            orders=[node.order for node in nodes],
        )


@dataclass
class PolygonRings:
    """One exterior ring and any number of interior rings (holes)."""

    exterior: Ring
    holes: list[Ring] = field(default_factory=list)

    def rings(self) -> list[Ring]:
        return [self.exterior] + list(self.holes)


def _shoelace(points: Sequence[Point], origin: Optional[Point] = None) -> float:
    if origin is None:
        origin = points[0]
    total = 0.0
    count = len(points)
    for index in range(count):
        total += (points[index] - origin).cross(points[(index + 1) % count] - origin)
    return total


def bounding_box(points: Sequence[Point]) -> tuple[float, float, float, float]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def as_point(value: PointLike) -> Point:
    if isinstance(value, Point):
        return value
    return Point(value[0], value[1])


def ring_area_and_orientation(
    ring: Union[Ring, Sequence[PointLike]]
) -> tuple[float, Orientation]:
    """
    Shoelace area and orientation of a ring or of a plain vertex list.

    The ring is Degenerate when |signed area| <= 1e-12 * (bounding-box diagonal)^2.
    """
    points = ring.points() if isinstance(ring, Ring) else [as_point(p) for p in ring]
    if len(points) < 3:
        return 0.0, Orientation.DEGENERATE
    signed = _shoelace(points) / 2.0
    min_x, min_y, max_x, max_y = bounding_box(points)
    diagonal_sq = (max_x - min_x) ** 2 + (max_y - min_y) ** 2
    if abs(signed) <= AREA_RATIO * diagonal_sq:
        return 0.0, Orientation.DEGENERATE
    orientation = Orientation.CCW if signed > 0 else Orientation.CW
    return abs(signed), orientation


def ring_from_points(points: Sequence[PointLike]) -> Ring:
    """
    Build a counterclockwise ring from an ordered vertex list.

    A closing point equal to the first one is dropped and consecutive duplicates are
    merged. Clockwise input is reversed and flagged on the ring.

    Raises:
        InvalidCoordinate: if a coordinate is NaN or infinite.
        DegenerateRing: if fewer than three distinct vertices remain or the area is zero.
    """
    converted = [as_point(p) for p in points]
    if len(converted) < 3:
        raise DegenerateRing(f"A ring needs at least 3 distinct vertices, got {len(converted)}")
    min_x, min_y, max_x, max_y = bounding_box(converted)
    tolerance = DEGENERACY_RATIO * math.hypot(max_x - min_x, max_y - min_y)

    distinct: list[Point] = []
    for point in converted:
        if distinct and point.distance_to(distinct[-1]) <= tolerance:
            continue
        distinct.append(point)
    while len(distinct) > 1 and distinct[-1].distance_to(distinct[0]) <= tolerance:
        distinct.pop()
    if len(distinct) < 3:
        raise DegenerateRing(f"A ring needs at least 3 distinct vertices, got {len(distinct)}")

    _, orientation = ring_area_and_orientation(distinct)
    if orientation is Orientation.DEGENERATE:
        raise DegenerateRing("Ring has zero area")
    if orientation is Orientation.CW:
        count = len(distinct)
        reversed_orders = [0] + list(range(count - 1, 0, -1))
        return Ring(
            [distinct[order] for order in reversed_orders],
            was_clockwise=True,
            orders=reversed_orders,
        )
    return Ring(distinct)


def interior_angle(ring: Ring, index: int) -> InteriorAngle:
    """
    Interior angle between segment `index` and segment `index + 1`.

    This is the angle at vertex `index + 1`, measured on the left of counterclockwise
    travel: π/2 at a convex corner, 3π/2 at a reflex one, π on a straight run.

    Raises:
        SpikeAngle: if the vertex folds back onto itself.
    """
    node = ring.vertex(index + 1)
    angle = interior_angle_at(node.prev.point, node.point, node.next.point)
    if is_spike(angle):
        position = (index + 1) % len(ring)
        raise SpikeAngle(f"Spike at vertex {position}", position)
    return angle
