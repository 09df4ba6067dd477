from .base import PolygonResult, RingSimplifierBase, SimplifyReport, SimplifyResult
from .baseline import RdpParams, RdpSimplifier, rdp_polyline, rdp_ring
from .footprint import (
    EditEvent,
    SimplificationRun,
    SimplifyParams,
    SpatialPropertySimplifier,
    simplify,
    simplify_polygon,
)
from .segment_queue import SegmentHandle, SegmentQueue

__all__ = [
    "PolygonResult",
    "RingSimplifierBase",
    "SimplifyReport",
    "SimplifyResult",
    "RdpParams",
    "RdpSimplifier",
    "rdp_polyline",
    "rdp_ring",
    "EditEvent",
    "SimplificationRun",
    "SimplifyParams",
    "SpatialPropertySimplifier",
    "simplify",
    "simplify_polygon",
    "SegmentHandle",
    "SegmentQueue",
]
