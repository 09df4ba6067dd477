"""
Tests for RingSimplifierBase.
"""

import pytest

from footprint_simplify import get_simplifier_for_method
from footprint_simplify.constants import SimplifierMethodEnum
from footprint_simplify.geometry.ring import PolygonRings, Ring, ring_from_points
from footprint_simplify.simplifiers.base import (
    PolygonResult,
    RingSimplifierBase,
    SimplifyReport,
    SimplifyResult,
)
from footprint_simplify.simplifiers.baseline.rdp_simplifier import RdpSimplifier
from footprint_simplify.simplifiers.footprint.spatial_property_simplifier import (
    SpatialPropertySimplifier,
)
from tests.conftest import SQUARE


class KeepEveryOtherSimplifier(RingSimplifierBase):
    """Concrete implementation for testing: keeps every other vertex of rings with six or
    more vertices and drops smaller rings."""

    method = SimplifierMethodEnum.RDP

    def simplify_ring(self, ring: Ring) -> SimplifyResult:
        report = SimplifyReport(initial_vertices=len(ring))
        if len(ring) < 6:
            report.vanished = True
            return SimplifyResult(None, report)
        kept = ring.points()[::2]
        report.final_vertices = len(kept)
        return SimplifyResult(Ring(kept), report)


def square_ring() -> Ring:
    return ring_from_points(SQUARE)


def octagon(scale: float) -> Ring:
    s = scale
    return ring_from_points(
        [(0, 0), (s, 0), (2 * s, 0), (2 * s, s), (2 * s, 2 * s), (s, 2 * s), (0, 2 * s), (0, s)]
    )


class TestRingSimplifierBase:
    """Test cases for RingSimplifierBase."""

    def test_cannot_instantiate_abstract_class(self):
        """Test that abstract base class cannot be instantiated directly."""
        with pytest.raises(TypeError):
            RingSimplifierBase()

    def test_simplify_points_builds_the_ring(self):
        """Test simplify_points normalizes the input before simplifying."""
        result = KeepEveryOtherSimplifier().simplify_points(octagon(5).oriented_points())
        assert len(result.ring) == 4
        assert result.report.initial_vertices == 8

    def test_polygon_keeps_surviving_holes(self):
        """Test every ring is simplified and reports come exterior first."""
        polygon = PolygonRings(octagon(10), [octagon(1), square_ring()])
        result = KeepEveryOtherSimplifier().simplify_polygon(polygon)

        assert isinstance(result, PolygonResult)
        assert not result.vanished
        assert len(result.polygon.exterior) == 4
        assert len(result.polygon.holes) == 1
        assert [report.initial_vertices for report in result.reports] == [8, 8, 4]
        assert result.reports[2].vanished

    def test_polygon_vanishes_with_its_exterior(self):
        """Test the polygon is None when the exterior ring vanishes."""
        polygon = PolygonRings(square_ring(), [octagon(1)])
        result = KeepEveryOtherSimplifier().simplify_polygon(polygon)

        assert result.vanished
        assert result.polygon is None
        assert len(result.reports) == 2

    def test_report_to_dict(self):
        """Test the report serializes every counter."""
        report = SimplifyReport(initial_vertices=8, final_vertices=4, joins=2)
        data = report.to_dict()
        assert data["initial_vertices"] == 8
        assert data["joins"] == 2
        assert data["vanished"] is False
        assert "budget_exhausted" in data

    def test_result_vanished_flag(self):
        """Test SimplifyResult.vanished mirrors a missing ring."""
        assert SimplifyResult(None, SimplifyReport()).vanished
        assert not SimplifyResult(square_ring(), SimplifyReport()).vanished


class TestGetSimplifierForMethod:
    """Test cases for get_simplifier_for_method."""

    @pytest.mark.parametrize(
        "method, expected",
        [
            (SimplifierMethodEnum.SPATIAL_PROPERTY, SpatialPropertySimplifier),
            (SimplifierMethodEnum.RDP, RdpSimplifier),
        ],
    )
    def test_known_methods(self, method, expected):
        """Test each method maps to its simplifier class."""
        simplifier = get_simplifier_for_method(method)
        assert simplifier is expected
        assert simplifier.method is method

    def test_unknown_method(self):
        """Test an unknown method raises ValueError."""
        with pytest.raises(ValueError, match="not recognized"):
            get_simplifier_for_method("douglas")
