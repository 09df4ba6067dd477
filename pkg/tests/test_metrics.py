"""
Tests for the quality measures.
"""

import math

import pytest
from hypothesis import given, settings

from footprint_simplify.geometry.primitives import Point, point_segment_distance
from footprint_simplify.geometry.ring import ring_from_points
from footprint_simplify.metrics import (
    _directed_hausdorff,
    area_centroid,
    hausdorff_distance,
    quality_report,
    right_angle_fraction,
)
from tests.conftest import NOTCH, SQUARE, star_rings


class TestHausdorffDistance:
    """Test cases for hausdorff_distance."""

    def test_identical_rings(self, square):
        """Test a ring is at distance zero from itself."""
        assert hausdorff_distance(square, square.copy()) == 0.0

    def test_notch_against_its_rectangle(self, notch, square):
        """Test the notch floor is one unit from the filled edge."""
        assert hausdorff_distance(notch, square) == pytest.approx(1.0)

    def test_shifted_squares(self, square):
        """Test a unit shift gives a distance of one."""
        shifted = ring_from_points([(1, 0), (11, 0), (11, 10), (1, 10)])
        assert hausdorff_distance(square, shifted) == pytest.approx(1.0)

    def test_is_symmetric(self, notch, square):
        """Test the measure does not depend on argument order."""
        assert hausdorff_distance(notch, square) == hausdorff_distance(square, notch)

    def test_finds_the_worst_point_inside_a_segment(self, square):
        """Test a maximum reached between vertices is found."""
        # Every vertex of the triangle lies on the square; the middle of its long side does not
        triangle = ring_from_points([(0, 0), (10, 0), (10, 10)])
        assert _directed_hausdorff(triangle, square, 1e-12) == pytest.approx(5.0)
        assert hausdorff_distance(triangle, square) == pytest.approx(50 ** 0.5)


class TestRightAngleFraction:
    """Test cases for right_angle_fraction."""

    def test_rectilinear_rings(self, square, notch):
        """Test every corner of a rectilinear ring counts."""
        assert right_angle_fraction(square) == 1.0
        assert right_angle_fraction(notch) == 1.0

    def test_mixed_ring(self):
        """Test only corners within five degrees of a right angle count."""
        ring = ring_from_points([(0, 0), (10, 0), (10, 10), (5, 12), (0, 10)])
        assert right_angle_fraction(ring) == pytest.approx(2 / 5)

    def test_vanished(self):
        """Test a missing ring has no right angles."""
        assert right_angle_fraction(None) == 0.0


class TestQualityReport:
    """Test cases for quality_report."""

    def test_simplified_notch(self, notch, square):
        """Test counts, areas and distance for the filled notch."""
        report = quality_report(notch, square)

        assert report.segment_count_before == 8
        assert report.segment_count_after == 4
        assert report.area_before == 98.0
        assert report.area_after == 100.0
        assert report.hausdorff == pytest.approx(1.0)
        assert report.right_angle_fraction_after == 1.0
        assert not report.vanished

    def test_vanished_ring(self, square):
        """Test a vanished result reports zero size and the distance to the centroid."""
        report = quality_report(square, None)

        assert report.vanished
        assert report.segment_count_after == 0
        assert report.area_after == 0.0
        assert report.hausdorff == pytest.approx(math.hypot(5, 5))
        assert report.to_dict()["vanished"] is True

    def test_centroid(self):
        """Test the area centroid of a square is its center."""
        assert area_centroid(ring_from_points(SQUARE)) == Point(5, 5)
        assert area_centroid(ring_from_points(NOTCH)).x == pytest.approx(5.0)


def sampled_directed_hausdorff(source, target, samples_per_edge=1000):
    """Largest distance from evenly spaced boundary samples of `source` to `target`."""
    targets = target.segments()
    best = 0.0
    for segment in source.segments():
        for step in range(samples_per_edge + 1):
            point = segment.start + segment.vector.scaled(step / samples_per_edge)
            best = max(best, min(point_segment_distance(edge, point) for edge in targets))
    return best


class TestHausdorffProperties:
    """Properties of hausdorff_distance over random rings."""

    @settings(max_examples=100, deadline=None)
    @given(
        first=star_rings(max_vertices=10),
        second=star_rings(max_vertices=10),
        third=star_rings(max_vertices=10),
    )
    def test_triangle_inequality(self, first, second, third):
        """Test the distance through a third ring is never shorter."""
        a, b, c = (ring_from_points(points) for points in (first, second, third))
        direct = hausdorff_distance(a, c)
        assert direct <= hausdorff_distance(a, b) + hausdorff_distance(b, c) + 1e-9 * (1 + direct)

    @settings(max_examples=20, deadline=None)
    @given(
        first=star_rings(max_vertices=8, radius=1.0),
        second=star_rings(max_vertices=8, radius=1.0),
    )
    def test_agrees_with_dense_sampling(self, first, second):
        """Test the exact search matches 1000 samples per edge to within 1e-3."""
        a, b = ring_from_points(first), ring_from_points(second)
        sampled = max(sampled_directed_hausdorff(a, b), sampled_directed_hausdorff(b, a))
        assert hausdorff_distance(a, b) == pytest.approx(sampled, abs=1e-3)
