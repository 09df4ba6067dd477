"""
Tests for the length-ordered segment queue.
"""

from footprint_simplify.geometry.ring import ring_from_points
from footprint_simplify.simplifiers.segment_queue import SegmentHandle, SegmentQueue
from tests.conftest import NOTCH, SQUARE


class TestSegmentQueue:
    """Test cases for SegmentQueue."""

    def test_pops_shortest_first(self):
        """Test segments come out in ascending length."""
        ring = ring_from_points(NOTCH)
        queue = SegmentQueue()
        for vertex in ring.vertices():
            queue.push(vertex)

        lengths = []
        while queue:
            handle = queue.pop()
            if handle is None:
                break
            lengths.append(handle.vertex.segment.length)
        assert lengths == sorted(lengths)
        assert len(lengths) == 8

    def test_ties_pop_in_insertion_order(self):
        """Test equal lengths are served first in, first out."""
        ring = ring_from_points(SQUARE)
        queue = SegmentQueue()
        for vertex in ring.vertices():
            queue.push(vertex)
        orders = [queue.pop().vertex.order for _ in range(4)]
        assert orders == [0, 1, 2, 3]

    def test_stale_entries_are_skipped_and_counted(self):
        """Test entries invalidated by an edit are dropped when they reach the front."""
        ring = ring_from_points(SQUARE)
        queue = SegmentQueue()
        for vertex in ring.vertices():
            queue.push(vertex)
        ring.remove_vertex(ring.vertex(1))

        popped = []
        while True:
            handle = queue.pop()
            if handle is None:
                break
            popped.append(handle.vertex.order)
        assert popped == [2, 3]
        assert queue.stale_dequeues == 2

    def test_pop_on_empty_queue(self):
        """Test an empty queue returns None."""
        queue = SegmentQueue()
        assert not queue
        assert queue.pop() is None
        assert queue.stale_dequeues == 0

    def test_handle_currency(self):
        """Test a handle goes stale once its segment is replaced."""
        ring = ring_from_points(SQUARE)
        vertex = ring.vertex(0)
        handle = SegmentHandle(vertex, vertex.generation)
        assert handle.is_current()
        assert handle.vertex.segment.length == 10.0

        vertex.generation += 1
        assert not handle.is_current()
