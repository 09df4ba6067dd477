"""
Footprint Simplify - Simplification of Building Footprints

A Python library for simplifying polygon rings of building and indoor footprints.
Removes short intrusions, extrusions and offsets while keeping right angles, and
ships a Ramer-Douglas-Peucker baseline and quality metrics to compare against.
"""

from .simplifiers.footprint.spatial_property_simplifier import (
    SpatialPropertySimplifier,
    simplify,
    simplify_polygon,
)
from .simplifiers.footprint.params import EditEvent, SimplifyParams
from .simplifiers.baseline.rdp_simplifier import RdpParams, RdpSimplifier, rdp_polyline, rdp_ring
from .simplifiers.base import PolygonResult, RingSimplifierBase, SimplifyReport, SimplifyResult
from .geometry.ring import PolygonRings, Ring, ring_from_points
from .metrics import QualityReport, hausdorff_distance, quality_report, right_angle_fraction
from .constants import GEOMETRY_FORMATS, OUTPUT_FORMATS, REPORT_FORMATS, SimplifierMethodEnum

__version__ = "0.1.0"


def get_simplifier_for_method(method: SimplifierMethodEnum) -> type[RingSimplifierBase]:
    if method == SimplifierMethodEnum.SPATIAL_PROPERTY:
        return SpatialPropertySimplifier
    if method == SimplifierMethodEnum.RDP:
        return RdpSimplifier
    raise ValueError(f'SimplifierMethodEnum {method} not recognized.')


__all__ = [
    "SpatialPropertySimplifier",
    "simplify",
    "simplify_polygon",
    "EditEvent",
    "SimplifyParams",
    "RdpParams",
    "RdpSimplifier",
    "rdp_polyline",
    "rdp_ring",
    "PolygonResult",
    "RingSimplifierBase",
    "SimplifyReport",
    "SimplifyResult",
    "PolygonRings",
    "Ring",
    "ring_from_points",
    "QualityReport",
    "hausdorff_distance",
    "quality_report",
    "right_angle_fraction",
    "GEOMETRY_FORMATS",
    "OUTPUT_FORMATS",
    "REPORT_FORMATS",
    "SimplifierMethodEnum",
    "get_simplifier_for_method",
]
