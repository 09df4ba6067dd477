"""
Tests for validity reporting.
"""

from footprint_simplify.geometry.ring import PolygonRings, ring_from_points
from footprint_simplify.validity import VALID, check_validity
from tests.conftest import SQUARE


class TestCheckValidity:
    """Test cases for check_validity."""

    def test_valid_square(self):
        """Test a simple ring is reported valid."""
        assert check_validity(PolygonRings(ring_from_points(SQUARE))) == VALID

    def test_valid_with_hole(self, square_with_hole):
        """Test holes inside the exterior are valid."""
        assert check_validity(square_with_hole) == VALID

    def test_vanished(self):
        """Test a vanished polygon has no validity."""
        assert check_validity(None) is None

    def test_self_intersection(self, caplog):
        """Test a crossing ring is described and logged."""
        bowtie = PolygonRings(ring_from_points([(0, 0), (10, 10), (10, 0), (0, 5)]))
        explanation = check_validity(bowtie)
        assert explanation.startswith("Self-intersection")
        assert "Simplified polygon is invalid" in caplog.text
