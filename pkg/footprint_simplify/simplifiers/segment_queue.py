"""
Length-ordered segment queue with lazy deletion.
"""

import heapq
import itertools
from typing import NamedTuple, Optional

from footprint_simplify.geometry.ring import RingVertex


class SegmentHandle(NamedTuple):
    """
    Reference to the segment starting at `vertex`, stamped with the vertex's generation
    at the time the handle was taken.
    """

    vertex: RingVertex
    generation: int

    def is_current(self) -> bool:
        return self.vertex.alive and self.vertex.generation == self.generation


class SegmentQueue:
    """
    Min-priority queue of segments keyed by (length, insertion sequence).

    Entries whose handle has gone stale are dropped silently when they reach the front
    and counted in `stale_dequeues`.
    """

    def __init__(self) -> None:
        self._heap: list[tuple[float, int, SegmentHandle]] = []
        self._sequence = itertools.count()
        self.stale_dequeues = 0

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)

    def push(self, vertex: RingVertex) -> SegmentHandle:
        handle = SegmentHandle(vertex, vertex.generation)
        heapq.heappush(self._heap, (vertex.segment.length, next(self._sequence), handle))
        return handle

    def pop(self) -> Optional[SegmentHandle]:
        """The shortest live segment, or None once only stale entries remain."""
        while self._heap:
            _, _, handle = heapq.heappop(self._heap)
            if handle.is_current():
                return handle
            self.stale_dequeues += 1
        return None
