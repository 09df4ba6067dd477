from .primitives import (
    DirectionAngle,
    InteriorAngle,
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
    turn_angle,
)
from .ring import (
    PolygonRings,
    Ring,
    RingVertex,
    interior_angle,
    ring_area_and_orientation,
    ring_from_points,
)

__all__ = [
    "DirectionAngle",
    "InteriorAngle",
    "Line",
    "Point",
    "Segment",
    "angle_difference",
    "direction_angle",
    "interior_angle_at",
    "is_spike",
    "line_intersection",
    "point_along",
    "point_segment_distance",
    "regression_angle",
    "turn_angle",
    "PolygonRings",
    "Ring",
    "RingVertex",
    "interior_angle",
    "ring_area_and_orientation",
    "ring_from_points",
]
