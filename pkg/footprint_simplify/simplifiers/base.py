"""
Base class for ring simplifiers.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, NamedTuple, Optional, Sequence

from footprint_simplify.constants import SimplifierMethodEnum
from footprint_simplify.geometry.ring import PointLike, PolygonRings, Ring, ring_from_points

logger = logging.getLogger(__name__)


@dataclass
class SimplifyReport:
    """Counters and flags describing one ring's simplification run."""

    initial_vertices: int = 0
    final_vertices: int = 0
    collinear_merges: int = 0
    regressions: int = 0
    translations: int = 0
    joins: int = 0
    remove_middle_points: int = 0
    fallback_skips: int = 0
    cleanup_removals: int = 0
    discards: int = 0
    dequeues: int = 0
    stale_dequeues: int = 0
    budget_exhausted: bool = False
    vanished: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class SimplifyResult(NamedTuple):
    """A simplified ring, or None when the ring vanished, with its report."""

    ring: Optional[Ring]
    report: SimplifyReport

    @property
    def vanished(self) -> bool:
        return self.ring is None


@dataclass
class PolygonResult:
    """
    A simplified polygon. `polygon` is None when the exterior ring vanished; vanished
    holes are dropped. `reports` holds one report per input ring, exterior first.
    """

    polygon: Optional[PolygonRings]
    reports: list[SimplifyReport] = field(default_factory=list)

    @property
    def vanished(self) -> bool:
        return self.polygon is None


class RingSimplifierBase(ABC):
    """
    Abstract base class for all ring simplifiers.

    Subclasses implement `simplify_ring`; polygons and raw point lists are handled here.
    """

    method: SimplifierMethodEnum

    @abstractmethod
    def simplify_ring(self, ring: Ring) -> SimplifyResult:
        """Simplify one counterclockwise ring. The input ring is left untouched."""
        pass

    def simplify_points(self, points: Sequence[PointLike]) -> SimplifyResult:
        return self.simplify_ring(ring_from_points(points))

    def simplify_polygon(self, polygon: PolygonRings) -> PolygonResult:
        """
        Simplify every ring of a polygon independently.

        Args:
            polygon: Exterior ring and holes, each already normalized to counterclockwise

        Returns:
            PolygonResult without the vanished holes, or with `polygon=None` when the
            exterior ring vanished
        """
        exterior = self.simplify_ring(polygon.exterior)
        reports = [exterior.report]
        holes: list[Ring] = []
        for index, hole in enumerate(polygon.holes):
            result = self.simplify_ring(hole)
            reports.append(result.report)
            if result.ring is None:
                logger.debug("Hole %d vanished", index)
                continue
            holes.append(result.ring)
        if exterior.ring is None:
            return PolygonResult(None, reports)
        return PolygonResult(PolygonRings(exterior.ring, holes), reports)
