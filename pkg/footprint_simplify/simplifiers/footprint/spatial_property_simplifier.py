"""
Simplifier that preserves the rectilinear character of building footprints.
"""

from typing import Optional

from footprint_simplify.constants import SimplifierMethodEnum
from footprint_simplify.geometry.ring import PolygonRings, Ring
from footprint_simplify.simplifiers.base import PolygonResult, RingSimplifierBase, SimplifyResult
from footprint_simplify.simplifiers.footprint.params import SimplifyParams
from footprint_simplify.simplifiers.footprint.simplification_run import (
    EditListener,
    SimplificationRun,
)


class SpatialPropertySimplifier(RingSimplifierBase):
    """
    Removes intrusions, extrusions and offsets shorter than `params.tau` while restoring
    corners and merging collinear runs.

    Args:
        params: Thresholds of the run
        edit_listener: Optional callable receiving every EditEvent of every ring

    Example:

        >>> simplifier = SpatialPropertySimplifier(SimplifyParams(tau=2.0))
        >>> result = simplifier.simplify_points(
        ...     [(0, 0), (4, 0), (4, 1), (6, 1), (6, 0), (10, 0), (10, 10), (0, 10)]
        ... )
        >>> len(result.ring)
        4
    """

    method = SimplifierMethodEnum.SPATIAL_PROPERTY

    def __init__(self, params: SimplifyParams, edit_listener: Optional[EditListener] = None):
        self.params = params
        self.edit_listener = edit_listener

    def simplify_ring(self, ring: Ring) -> SimplifyResult:
        return SimplificationRun(ring.copy(), self.params, self.edit_listener).run()


def simplify(
    ring: Ring, params: SimplifyParams, edit_listener: Optional[EditListener] = None
) -> SimplifyResult:
    """Simplify a copy of `ring`. The result's ring is None when the ring vanished."""
    return SpatialPropertySimplifier(params, edit_listener).simplify_ring(ring)


def simplify_polygon(polygon: PolygonRings, params: SimplifyParams) -> PolygonResult:
    return SpatialPropertySimplifier(params).simplify_polygon(polygon)


if __name__ == "__main__":
    from footprint_simplify.geometry.ring import ring_from_points

    notch = ring_from_points([(0, 0), (4, 0), (4, 1), (6, 1), (6, 0), (10, 0), (10, 10), (0, 10)])
    for tau in (0.5, 1.5, 2.5):
        result = simplify(notch, SimplifyParams(tau=tau))
        print(tau, result.ring)
