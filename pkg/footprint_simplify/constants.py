"""
Constants used across simplifiers, readers and writers.
"""

import math
from typing import Literal
from enum import Enum

# Geometry formats
GEOMETRY_FORMATS = Literal["geojson", "wkt", "auto"]
OUTPUT_FORMATS = Literal["geojson", "wkt"]
REPORT_FORMATS = Literal["json", "csv"]

# Joining distance policies
GAMMA_POLICIES = Literal["fixed", "dynamic"]

# Default thresholds of the experimental setting
DEFAULT_EPSILON = math.pi / 36
DEFAULT_DELTA = math.pi / 180
DEFAULT_GAMMA = "dynamic"

# Relative tolerances, scaled by the ring's bounding-box diagonal
DEGENERACY_RATIO = 1e-9
PARALLEL_RATIO = 1e-12
AREA_RATIO = 1e-12
# Neighbour lengths this close count as equal when translating
LENGTH_TIE_RATIO = 1e-12
# The incremental area is re-summed exactly below this fraction of diagonal squared
AREA_RECHECK_RATIO = 1e-6

# Interior angles closer than this to 0 or 2π are spikes
SPIKE_ANGLE = 1e-9

# Dequeue budget per initial segment
BUDGET_FACTOR = 16

RIGHT_ANGLE_WINDOW = math.radians(5.0)

SWEEP_CSV_HEADER = ("tau", "segments", "vertices", "area", "hausdorff")
COMPARE_CSV_HEADER = (
    "index",
    "id",
    "segments_original",
    "segments_spatial_property",
    "segments_rdp",
    "hausdorff_spatial_property",
    "hausdorff_rdp",
    "right_angle_original",
    "right_angle_spatial_property",
    "right_angle_rdp",
    "vanished_spatial_property",
    "vanished_rdp",
)


class SimplifierMethodEnum(Enum):
    SPATIAL_PROPERTY = 'spatial_property'
    RDP = 'rdp'


class Orientation(Enum):
    CCW = 'ccw'
    CW = 'cw'
    DEGENERATE = 'degenerate'
