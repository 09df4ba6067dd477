"""
Post-run validity reporting. Simplified rings are checked, never repaired.
"""

import logging
from typing import Optional

from shapely.geometry import Polygon
from shapely.validation import explain_validity

from footprint_simplify.geometry.ring import PolygonRings

logger = logging.getLogger(__name__)

VALID = "Valid Geometry"


def check_validity(polygon: Optional[PolygonRings]) -> Optional[str]:
    """
    Describe whether a polygon is valid, e.g. "Valid Geometry" or
    "Self-intersection[5 0]". Returns None for a vanished polygon.
    """
    if polygon is None:
        return None
    shape = Polygon(
        [point.as_tuple() for point in polygon.exterior.points()],
        [[point.as_tuple() for point in hole.points()] for hole in polygon.holes],
    )
    if shape.is_valid:
        return VALID
    explanation = explain_validity(shape)
    logger.warning("Simplified polygon is invalid: %s", explanation)
    return explanation
