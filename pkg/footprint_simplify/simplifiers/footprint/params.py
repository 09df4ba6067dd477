"""
Thresholds of the spatial-property simplifier and the edit events it emits.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Union

from footprint_simplify.constants import (
    DEFAULT_DELTA,
    DEFAULT_EPSILON,
    DEFAULT_GAMMA,
    GAMMA_POLICIES,
)
from footprint_simplify.exceptions import ParameterOutOfRange
from footprint_simplify.geometry.primitives import Point


@dataclass(frozen=True)
class SimplifyParams:
    """
    Thresholds controlling which edits are applied.

    Args:
        tau: Distance threshold. Only segments no longer than tau are simplified
        epsilon: Angle threshold for the regression and translation tests, in [0, π/2)
        delta: Collinearity half-window around π, in [0, π/2)
        gamma: Joining distance threshold, a non-negative number or "dynamic" to use
            the current segment's length
        legacy_translate_sign: Use the subtractive formula when translating towards
            the shorter trailing neighbour

    Example:

        >>> SimplifyParams(tau=2.0).gamma_for(1.5)
        1.5
    """

    tau: float
    epsilon: float = DEFAULT_EPSILON
    delta: float = DEFAULT_DELTA
    gamma: Union[float, str] = DEFAULT_GAMMA
    legacy_translate_sign: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau >= 0):
            raise ParameterOutOfRange(f"tau must be a finite number >= 0, got {self.tau}")
        if not 0 <= self.epsilon < math.pi / 2:
            raise ParameterOutOfRange(f"epsilon must lie in [0, π/2), got {self.epsilon}")
        if not 0 <= self.delta < math.pi / 2:
            raise ParameterOutOfRange(f"delta must lie in [0, π/2), got {self.delta}")
        if isinstance(self.gamma, str):
            if self.gamma != "dynamic":
                raise ParameterOutOfRange(
                    f'gamma must be a number or "dynamic", got {self.gamma!r}'
                )
        elif not (math.isfinite(self.gamma) and self.gamma >= 0):
            raise ParameterOutOfRange(f"gamma must be a finite number >= 0, got {self.gamma}")

    @property
    def gamma_policy(self) -> GAMMA_POLICIES:
        return "dynamic" if self.gamma == "dynamic" else "fixed"

    def gamma_for(self, current_length: float) -> float:
        if isinstance(self.gamma, str):
            return current_length
        return float(self.gamma)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tau": self.tau,
            "epsilon": self.epsilon,
            "delta": self.delta,
            "gamma": self.gamma,
            "legacy_translate_sign": self.legacy_translate_sign,
        }


@dataclass(frozen=True)
class EditEvent:
    """
    One change applied to a ring.

    `before` and `after` list the coordinates of the affected run of vertices, in ring
    order, immediately before and after the change. `variant` distinguishes the
    translation cases ("shorter_leading", "shorter_trailing", "equal") and the cleanup
    kinds ("zero_length", "spike").
    """

    operation: str
    before: Tuple[Point, ...]
    after: Tuple[Point, ...]
    variant: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "operation": self.operation,
            "variant": self.variant,
            "before": [point.as_tuple() for point in self.before],
            "after": [point.as_tuple() for point in self.after],
        }
