"""
Command-line configuration.
"""

import math
from dataclasses import dataclass
from typing import List, Literal, Optional, Union

from footprint_simplify.constants import (
    DEFAULT_DELTA,
    DEFAULT_EPSILON,
    DEFAULT_GAMMA,
    GEOMETRY_FORMATS,
    OUTPUT_FORMATS,
    REPORT_FORMATS,
)
from footprint_simplify.exceptions import ParameterOutOfRange
from footprint_simplify.simplifiers.baseline.rdp_simplifier import RdpParams
from footprint_simplify.simplifiers.footprint.params import SimplifyParams

SUBCOMMANDS = Literal["simplify", "sweep", "compare", "render"]


@dataclass
class CliConfig:
    """
    Everything a subcommand needs. Paths may be "-" for stdin / stdout.

    Defaults for epsilon, delta and gamma are π/36, π/180 and the current segment length.
    """

    subcommand: SUBCOMMANDS
    input_path: str = "-"
    output_path: str = "-"
    input_format: GEOMETRY_FORMATS = "auto"
    output_format: OUTPUT_FORMATS = "geojson"
    tau: Optional[float] = None
    epsilon: float = DEFAULT_EPSILON
    delta: float = DEFAULT_DELTA
    gamma: Union[float, str] = DEFAULT_GAMMA
    rdp_tolerance: Optional[float] = None
    sweep_from: Optional[float] = None
    sweep_to: Optional[float] = None
    sweep_step: Optional[float] = None
    report_path: Optional[str] = None
    report_format: REPORT_FORMATS = "json"
    svg_path: Optional[str] = None
    svg_dir: Optional[str] = None
    trace_path: Optional[str] = None
    check_validity: bool = False
    legacy_translate_sign: bool = False
    rfc7946: bool = False
    threads: int = 0

    def __post_init__(self) -> None:
        if self.threads < 0:
            raise ParameterOutOfRange(f"threads must be >= 0, got {self.threads}")
        if self.subcommand == "sweep":
            if self.sweep_from is None or self.sweep_to is None or self.sweep_step is None:
                raise ParameterOutOfRange("sweep needs --from, --to and --step")
            if not (math.isfinite(self.sweep_step) and self.sweep_step > 0):
                raise ParameterOutOfRange(f"sweep step must be > 0, got {self.sweep_step}")
            if self.sweep_from < 0 or self.sweep_to < self.sweep_from:
                raise ParameterOutOfRange(
                    "sweep range must satisfy 0 <= from <= to, "
                    f"got {self.sweep_from}..{self.sweep_to}"
                )
        if self.subcommand in ("simplify", "compare") and self.tau is None:
            raise ParameterOutOfRange(f"{self.subcommand} needs --tau")
        if self.subcommand == "compare" and self.rdp_tolerance is None:
            raise ParameterOutOfRange("compare needs --rdp-tolerance")
        # Validate the thresholds up front so a bad value is a usage error
        if self.tau is not None:
            self.simplify_params()
        if self.rdp_tolerance is not None:
            self.rdp_params()

    def simplify_params(self, tau: Optional[float] = None) -> SimplifyParams:
        chosen = self.tau if tau is None else tau
        if chosen is None:
            raise ParameterOutOfRange("No distance threshold given")
        return SimplifyParams(
            tau=chosen,
            epsilon=self.epsilon,
            delta=self.delta,
            gamma=self.gamma,
            legacy_translate_sign=self.legacy_translate_sign,
        )

    def rdp_params(self) -> RdpParams:
        if self.rdp_tolerance is None:
            raise ParameterOutOfRange("No RDP tolerance given")
        return RdpParams(self.rdp_tolerance)

    def sweep_values(self) -> List[float]:
        """Thresholds from `sweep_from` to `sweep_to` inclusive, `sweep_step` apart."""
        assert self.sweep_from is not None and self.sweep_to is not None
        assert self.sweep_step is not None
        count = math.floor((self.sweep_to - self.sweep_from) / self.sweep_step + 1e-9)
        return [round(self.sweep_from + index * self.sweep_step, 12) for index in range(count + 1)]
