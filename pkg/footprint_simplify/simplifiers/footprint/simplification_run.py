"""
Queue-driven, in-place simplification of a single counterclockwise ring.

Segments are examined shortest first. Each one is either merged with its neighbour
(collinear vertex), regressed onto a line fitted through its neighbours, translated to
fill an intrusion or flatten an extrusion, joined into a corner, or dropped from
consideration. Edits are followed by a local cleanup of zero-length segments and spikes.
"""

import logging
import math
from collections import deque
from typing import Callable, Iterable, Optional, Sequence

from footprint_simplify.constants import (
    AREA_RATIO,
    AREA_RECHECK_RATIO,
    BUDGET_FACTOR,
    DEGENERACY_RATIO,
    LENGTH_TIE_RATIO,
)
from footprint_simplify.exceptions import DegenerateRing, DegenerateSegment, GeometryError
from footprint_simplify.geometry.primitives import (
    Line,
    Point,
    Segment,
    angle_difference,
    direction_angle,
    interior_angle_at,
    is_spike,
    line_intersection,
    point_along,
    point_segment_distance,
    regression_angle,
)
from footprint_simplify.geometry.ring import Ring, RingVertex
from footprint_simplify.simplifiers.base import SimplifyReport, SimplifyResult
from footprint_simplify.simplifiers.footprint.params import EditEvent, SimplifyParams
from footprint_simplify.simplifiers.segment_queue import SegmentHandle, SegmentQueue

logger = logging.getLogger(__name__)

EditListener = Callable[[EditEvent], None]
Touched = Optional[list[RingVertex]]


class SimplificationRun:
    """
    One simplification of one ring. The ring passed in is edited in place.

    The edit operations are public so they can be applied one at a time; `run` drives
    them from the segment queue until it is exhausted.

    Args:
        ring: Counterclockwise ring with at least three vertices
        params: Thresholds
        edit_listener: Called with an EditEvent after every change to the ring

    Example:

        >>> ring = ring_from_points([(0, 0), (4, 0), (4, 1), (10, 1), (10, 10), (0, 10)])
        >>> result = SimplificationRun(ring, SimplifyParams(tau=2.0)).run()
        >>> [p.as_tuple() for p in result.ring.points()]
        [(0.0, 1.0), (10.0, 1.0), (10.0, 10.0), (0.0, 10.0)]
    """

    def __init__(
        self,
        ring: Ring,
        params: SimplifyParams,
        edit_listener: Optional[EditListener] = None,
    ):
        diagonal = ring.diagonal()
        self._min_length = DEGENERACY_RATIO * diagonal
        self._min_area = AREA_RATIO * diagonal * diagonal
        if len(ring) < 3:
            raise DegenerateRing(f"A ring needs at least 3 vertices, got {len(ring)}")
        if ring.recompute_area() <= self._min_area:
            raise DegenerateRing("Ring must be counterclockwise with a positive area")

        self.ring = ring
        self.params = params
        self.report = SimplifyReport(initial_vertices=len(ring))
        self.queue = SegmentQueue()
        self.vanished = False
        self._budget = BUDGET_FACTOR * len(ring)
        self._edit_listener = edit_listener
        self._primed = False

    def handle_at(self, index: int) -> SegmentHandle:
        """Handle of the segment starting at vertex `index`, counted from the head."""
        vertex = self.ring.vertex(index)
        return SegmentHandle(vertex, vertex.generation)

    def run(self) -> SimplifyResult:
        if not self._primed:
            self._prime()
        while not self.vanished and len(self.ring) >= 3:
            handle = self.queue.pop()
            if handle is None:
                break
            if self.report.dequeues >= self._budget:
                self.report.budget_exhausted = True
                logger.warning(
                    "Dequeue budget of %d exhausted, returning the ring as it stands",
                    self._budget,
                )
                break
            self.report.dequeues += 1
            self._step(handle.vertex)
        return self._finish()

    def remove_middle_point(self, handle: SegmentHandle, settle: bool = True) -> None:
        """Merge segment `handle` with its successor by dropping their shared vertex."""
        self.report.remove_middle_points += 1
        self._apply(self._remove_middle_point(self._resolve(handle)), settle)

    def segment_regression(self, handle: SegmentHandle, settle: bool = True) -> None:
        self._apply(self._segment_regression(self._resolve(handle)), settle)

    def translate_segment(self, handle: SegmentHandle, settle: bool = True) -> None:
        self._apply(self._translate_segment(self._resolve(handle)), settle)

    def join_segment(self, handle: SegmentHandle, corner: Point, settle: bool = True) -> None:
        """Replace segment `handle` by extending both neighbours to `corner`."""
        self._apply(self._join_segment(self._resolve(handle), corner), settle)

    def _prime(self) -> None:
        self._primed = True
        self._cleanup(list(self.ring.vertices()))
        if self.vanished:
            return
        self._check_area()
        if self.vanished:
            return
        for vertex in list(self.ring.vertices()):
            self.queue.push(vertex)

    def _finish(self) -> SimplifyResult:
        if not self.vanished:
            area = self.ring.recompute_area()
            if len(self.ring) < 3 or area <= self._min_area:
                self._vanish()
        self.report.stale_dequeues = self.queue.stale_dequeues
        self.report.final_vertices = 0 if self.vanished else len(self.ring)
        logger.debug(
            "Simplified ring from %d to %d vertices in %d dequeues%s",
            self.report.initial_vertices,
            self.report.final_vertices,
            self.report.dequeues,
            " (vanished)" if self.vanished else "",
        )
        return SimplifyResult(None if self.vanished else self.ring, self.report)

    def _step(self, vertex: RingVertex) -> None:
        params = self.params
        segment = vertex.segment
        length = segment.length
        start_angle = interior_angle_at(vertex.prev.point, vertex.point, vertex.next.point)
        end_angle = interior_angle_at(vertex.point, vertex.next.point, vertex.next.next.point)
        alpha = angle_difference(start_angle, end_angle)

        if math.pi - params.delta < end_angle < math.pi + params.delta:
            self.report.collinear_merges += 1
            self._apply(self._remove_middle_point(vertex, "collinear_merge"))
        elif length <= params.tau:
            if alpha <= params.epsilon:
                self._apply(self._segment_regression(vertex))
            elif math.pi - alpha <= params.epsilon:
                self._apply(self._translate_segment(vertex))
            else:
                leading = vertex.prev.segment
                trailing = vertex.next.segment
                corner = line_intersection(Line.through(leading), Line.through(trailing))
                gamma = params.gamma_for(length)
                if corner is not None and point_segment_distance(segment, corner) <= gamma:
                    self._apply(self._join_segment(vertex, corner))
                else:
                    self.report.remove_middle_points += 1
                    shorter = vertex.prev if leading.length < trailing.length else vertex
                    self._apply(self._remove_middle_point(shorter))
        else:
            self.report.discards += 1

    def _remove_middle_point(
        self, vertex: RingVertex, operation: str = "remove_middle_point"
    ) -> Touched:
        middle = vertex.next
        following = middle.next
        if len(self.ring) <= 3:
            self._vanish()
            return None
        before = (vertex.point, middle.point, following.point)
        self.ring.remove_vertex(middle)
        self._emit(operation, before, (vertex.point, following.point))
        return [vertex, following]

    def _segment_regression(self, vertex: RingVertex) -> Touched:
        if len(self.ring) == 3:
            # A triangle has no outer neighbours to project onto
            self.report.remove_middle_points += 1
            return self._remove_middle_point(vertex)

        previous = vertex.prev
        middle = vertex.next
        following = middle.next
        leading = Segment(previous.point, vertex.point)
        trailing = Segment(middle.point, following.point)
        outer_leading = Segment(previous.prev.point, previous.point)
        outer_trailing = Segment(following.point, following.next.point)

        ratio = leading.length / (leading.length + trailing.length)
        try:
            anchor = point_along(vertex.segment, ratio)
            theta = regression_angle(direction_angle(leading), direction_angle(trailing), ratio)
        except DegenerateSegment:
            return self._fallback(vertex, "degenerate neighbour")
        regression = Line(anchor, Point(math.cos(theta), math.sin(theta)))
        first = line_intersection(Line.through(outer_leading), regression)
        second = line_intersection(Line.through(outer_trailing), regression)
        if first is None or second is None:
            return self._fallback(vertex, "parallel projection")
        if (
            self._reverses(leading, Segment(previous.point, first))
            or self._reverses(vertex.segment, Segment(first, second))
            or self._reverses(trailing, Segment(second, following.point))
        ):
            return self._fallback(vertex, "segment reversal")

        before = (
            previous.prev.point,
            previous.point,
            vertex.point,
            middle.point,
            following.point,
            following.next.point,
        )
        self.ring.move_vertex(vertex, first)
        self.ring.move_vertex(middle, second)
        self.report.regressions += 1
        after = before[:2] + (first, second) + before[4:]
        self._emit("segment_regression", before, after)
        return [previous, vertex, middle, following]

    def _translate_segment(self, vertex: RingVertex) -> Touched:
        previous = vertex.prev
        middle = vertex.next
        following = middle.next
        leading_length = previous.point.distance_to(vertex.point)
        trailing_length = middle.point.distance_to(following.point)
        equal = math.isclose(leading_length, trailing_length, rel_tol=LENGTH_TIE_RATIO)
        if len(self.ring) - (2 if equal else 1) < 3:
            self._vanish()
            return None

        before = (previous.point, vertex.point, middle.point, following.point)
        if equal:
            self.ring.remove_vertex(vertex)
            self.ring.remove_vertex(middle)
            variant = "equal"
            after: tuple[Point, ...] = (previous.point, following.point)
            touched = [previous, following]
        elif leading_length < trailing_length:
            moved = middle.point - (vertex.point - previous.point)
            self.ring.remove_vertex(vertex)
            self.ring.move_vertex(middle, moved)
            variant = "shorter_leading"
            after = (previous.point, moved, following.point)
            touched = [previous, middle, following]
        else:
            offset = following.point - middle.point
            if self.params.legacy_translate_sign:
                moved = vertex.point - offset
            else:
                moved = vertex.point + offset
            self.ring.move_vertex(vertex, moved)
            self.ring.remove_vertex(middle)
            variant = "shorter_trailing"
            after = (previous.point, moved, following.point)
            touched = [previous, vertex, following]

        self.report.translations += 1
        self._emit("translate_segment", before, after, variant)
        return touched

    def _join_segment(self, vertex: RingVertex, corner: Point) -> Touched:
        if len(self.ring) <= 3:
            self._vanish()
            return None
        previous = vertex.prev
        middle = vertex.next
        following = middle.next
        before = (previous.point, vertex.point, middle.point, following.point)
        self.ring.move_vertex(vertex, corner)
        self.ring.remove_vertex(middle)
        self.report.joins += 1
        self._emit("join_segment", before, (previous.point, corner, following.point))
        return [previous, vertex, following]

    def _fallback(self, vertex: RingVertex, reason: str) -> Touched:
        self.report.fallback_skips += 1
        logger.debug("Skipping regression at %s: %s", vertex.point.as_tuple(), reason)
        points = (vertex.prev.point, vertex.point, vertex.next.point, vertex.next.next.point)
        self._emit("fallback_skip", points, points, reason)
        return None

    def _reverses(self, old: Segment, new: Segment) -> bool:
        if new.length <= self._min_length:
            return False
        old_vector, new_vector = old.vector, new.vector
        scale = old_vector.norm() * new_vector.norm()
        return new_vector.dot(old_vector) < -DEGENERACY_RATIO * scale

    def _apply(self, touched: Touched, settle: bool = True) -> None:
        if touched is None or self.vanished:
            return
        if settle:
            surviving = self._cleanup(touched)
        else:
            surviving = [vertex for vertex in touched if vertex.alive]
        if self.vanished:
            return
        self._check_area()
        if self.vanished:
            return
        self._requeue(surviving)

    def _cleanup(self, touched: Iterable[RingVertex]) -> list[RingVertex]:
        """
        Remove zero-length segments and spikes around the touched vertices, spreading to
        the neighbours of every removed vertex. Returns the touched vertices still alive.
        """
        work = deque(touched)
        visited: dict[int, RingVertex] = {}
        while work and not self.vanished:
            vertex = work.popleft()
            if not vertex.alive:
                continue
            visited.setdefault(id(vertex), vertex)
            previous, following = vertex.prev, vertex.next
            if vertex.point.distance_to(following.point) <= self._min_length:
                self._cleanup_remove(following, "zero_length", work)
            elif previous.point.distance_to(vertex.point) <= self._min_length:
                self._cleanup_remove(vertex, "zero_length", work)
            elif is_spike(interior_angle_at(previous.point, vertex.point, following.point)):
                self._cleanup_remove(vertex, "spike", work)
        if self.vanished:
            return []
        return [vertex for vertex in visited.values() if vertex.alive]

    def _cleanup_remove(self, vertex: RingVertex, variant: str, work: deque) -> None:
        if len(self.ring) <= 3:
            self._vanish()
            return
        previous, following = vertex.prev, vertex.next
        before = (previous.point, vertex.point, following.point)
        self.ring.remove_vertex(vertex)
        self.report.cleanup_removals += 1
        self._emit("cleanup", before, (previous.point, following.point), variant)
        work.extend((previous, following))

    def _check_area(self) -> None:
        area = self.ring.signed_area
        if area <= self._min_area * (AREA_RECHECK_RATIO / AREA_RATIO):
            area = self.ring.recompute_area()
        if area <= self._min_area:
            self._vanish()

    def _requeue(self, vertices: Sequence[RingVertex]) -> None:
        segments: dict[int, RingVertex] = {}
        for vertex in vertices:
            segments.setdefault(id(vertex.prev), vertex.prev)
            segments.setdefault(id(vertex), vertex)
        for vertex in sorted(segments.values(), key=lambda node: node.rank):
            vertex.generation += 1
            self.queue.push(vertex)

    def _vanish(self) -> None:
        if self.vanished:
            return
        self.vanished = True
        self.report.vanished = True
        self._emit("vanish", tuple(self.ring.points()), ())

    def _resolve(self, handle: SegmentHandle) -> RingVertex:
        if self.vanished:
            raise GeometryError("The ring has vanished")
        if not handle.is_current():
            raise GeometryError("Segment handle is stale")
        return handle.vertex

    def _emit(
        self,
        operation: str,
        before: Sequence[Point],
        after: Sequence[Point],
        variant: Optional[str] = None,
    ) -> None:
        if self._edit_listener is not None:
            self._edit_listener(EditEvent(operation, tuple(before), tuple(after), variant))
