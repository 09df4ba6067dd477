from .params import EditEvent, SimplifyParams
from .simplification_run import EditListener, SimplificationRun
from .spatial_property_simplifier import SpatialPropertySimplifier, simplify, simplify_polygon

__all__ = [
    "EditEvent",
    "EditListener",
    "SimplifyParams",
    "SimplificationRun",
    "SpatialPropertySimplifier",
    "simplify",
    "simplify_polygon",
]
