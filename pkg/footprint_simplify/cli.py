"""
Command-line interface.

    footprint-simplify simplify notch.geojson --tau 2 --report report.json
    footprint-simplify sweep corridor.geojson --from 1.5 --to 4.5 --step 0.5 -o sweep.csv
    footprint-simplify compare corridor.geojson --tau 2 --rdp-tolerance 1.2 --svg compare.svg
    footprint-simplify render notch.geojson --tau 2 -o notch.svg

Exit codes: 0 success, 1 I/O error, 2 parse error, 64 usage error.
"""

import csv
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import partial
from typing import (
    IO,
    Any,
    Callable,
    Dict,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    TypeVar,
)

import click

from footprint_simplify import __version__
from footprint_simplify.config import CliConfig
from footprint_simplify.constants import (
    COMPARE_CSV_HEADER,
    DEFAULT_DELTA,
    DEFAULT_EPSILON,
    DEFAULT_GAMMA,
)
from footprint_simplify.exceptions import (
    FootprintSimplifyError,
    IoError,
    ParameterOutOfRange,
    ParseError,
)
from footprint_simplify.geometry.ring import PolygonRings
from footprint_simplify.io.features import FeatureReader, FeatureRecord, write_features
from footprint_simplify.io.numbers import format_number
from footprint_simplify.io.svg_renderer import SvgPanel, render_panels, render_svg
from footprint_simplify.io.sweep_csv import SweepRow, write_sweep_csv
from footprint_simplify.metrics import QualityReport, quality_report
from footprint_simplify.simplifiers.base import SimplifyReport
from footprint_simplify.simplifiers.baseline.rdp_simplifier import RdpSimplifier
from footprint_simplify.simplifiers.footprint.params import EditEvent, SimplifyParams
from footprint_simplify.simplifiers.footprint.spatial_property_simplifier import (
    SpatialPropertySimplifier,
)
from footprint_simplify.validity import check_validity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_USAGE = 64

THREADS_ENVVAR = "SIMPLIFY_THREADS"

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class FeatureOutcome:
    """A record before and after the engine ran, with one report per ring."""

    original: FeatureRecord
    simplified: FeatureRecord
    reports: List[SimplifyReport] = field(default_factory=list)
    events: List[EditEvent] = field(default_factory=list)

    def quality(self) -> Optional[QualityReport]:
        if self.original.polygon is None:
            return None
        after = self.simplified.polygon
        return quality_report(
            self.original.polygon.exterior, after.exterior if after is not None else None
        )


def _map_ordered(function: Callable[[T], R], items: Sequence[T], threads: int) -> List[R]:
    """Apply `function` to every item, on `threads` workers when > 1, keeping input order."""
    if threads <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))


def _simplify_record(
    record: FeatureRecord, params: SimplifyParams, trace: bool
) -> FeatureOutcome:
    if record.polygon is None:
        return FeatureOutcome(record, record)
    events: List[EditEvent] = []
    simplifier = SpatialPropertySimplifier(params, events.append if trace else None)
    result = simplifier.simplify_polygon(record.polygon)
    return FeatureOutcome(record, record.with_polygon(result.polygon), result.reports, events)


def _simplify_all(
    records: Sequence[FeatureRecord], params: SimplifyParams, threads: int, trace: bool = False
) -> List[FeatureOutcome]:
    return _map_ordered(partial(_simplify_record, params=params, trace=trace), records, threads)


def _baseline_record(record: FeatureRecord, simplifier: RdpSimplifier) -> FeatureRecord:
    if record.polygon is None:
        return record
    return record.with_polygon(simplifier.simplify_polygon(record.polygon).polygon)


def _polygon_area(polygon: Optional[PolygonRings]) -> float:
    if polygon is None:
        return 0.0
    return polygon.exterior.signed_area - sum(hole.signed_area for hole in polygon.holes)


def _read_records(config: CliConfig) -> List[FeatureRecord]:
    reader = FeatureReader(config.input_format)
    if config.input_path == "-":
        records = reader.read(click.get_binary_stream("stdin"))
    else:
        with open(config.input_path, "rb") as source:
            records = reader.read(source)
    logger.info("Read %d features from %s", len(records), config.input_path)
    if reader.skipped_count:
        logger.info("Skipped %d non-areal geometries", reader.skipped_count)
    return records


@contextmanager
def _open_output(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield click.get_text_stream("stdout")
        return
    with open(path, "w", encoding="utf-8", newline="") as sink:
        yield sink


def _write_text(path: str, text: str) -> None:
    with _open_output(path) as sink:
        sink.write(text)


def cmd_simplify(config: CliConfig) -> int:
    """
    Simplify every feature of the input and write the result.

    With `report_path`, a JSON array holds the simplify reports (one per ring) and the
    quality report of the exterior ring for each feature.
    """
    records = _read_records(config)
    params = config.simplify_params()
    outcomes = _simplify_all(records, params, config.threads, trace=config.trace_path is not None)
    simplified = [outcome.simplified for outcome in outcomes]

    with _open_output(config.output_path) as sink:
        write_features(simplified, config.output_format, sink, rfc7946=config.rfc7946)

    validities: List[Optional[str]] = []
    if config.check_validity:
        validities = [check_validity(record.polygon) for record in simplified]

    if config.report_path is not None:
        entries = []
        for index, outcome in enumerate(outcomes):
            quality = outcome.quality()
            entry: Dict[str, Any] = {
                "index": index,
                "id": outcome.original.id,
                "simplify": [report.to_dict() for report in outcome.reports],
                "quality": quality.to_dict() if quality is not None else None,
            }
            if config.check_validity:
                entry["validity"] = validities[index]
            entries.append(entry)
        _write_text(config.report_path, json.dumps(entries, indent=2) + "\n")

    if config.trace_path is not None:
        lines = [
            json.dumps({"feature": index, **event.to_dict()}) + "\n"
            for index, outcome in enumerate(outcomes)
            for event in outcome.events
        ]
        _write_text(config.trace_path, "".join(lines))

    if config.svg_path is not None:
        if records:
            _write_text(config.svg_path, render_svg(records, simplified))
        else:
            logger.warning("No features, skipping %s", config.svg_path)

    vanished = sum(1 for outcome in outcomes if outcome.simplified.vanished)
    logger.info(
        "Simplified %d features from %s, %d vanished", len(records), config.input_path, vanished
    )
    return EXIT_OK


def _sweep_row(tau: float, outcomes: Sequence[FeatureOutcome]) -> SweepRow:
    rings = [
        ring
        for outcome in outcomes
        if outcome.simplified.polygon is not None
        for ring in outcome.simplified.polygon.rings()
    ]
    segments = sum(len(ring) for ring in rings)
    hausdorff = 0.0
    for outcome in outcomes:
        quality = outcome.quality()
        if quality is not None:
            hausdorff = max(hausdorff, quality.hausdorff)
    return SweepRow(
        tau=tau,
        segments=segments,
        # Closed rings repeat their first position
        vertices=segments + len(rings),
        area=sum(_polygon_area(outcome.simplified.polygon) for outcome in outcomes),
        hausdorff=hausdorff,
    )


def cmd_sweep(config: CliConfig) -> int:
    """
    Simplify the whole input at every threshold of the sweep range and write one CSV
    row per threshold: total segments, total written positions, total area and the
    largest Hausdorff distance over all features.
    """
    records = _read_records(config)
    rows = []
    if not records:
        logger.warning("No features in %s, writing an empty sweep", config.input_path)
    else:
        if config.svg_dir is not None:
            os.makedirs(config.svg_dir, exist_ok=True)
        for tau in config.sweep_values():
            outcomes = _simplify_all(records, config.simplify_params(tau), config.threads)
            rows.append(_sweep_row(tau, outcomes))
            logger.info("tau=%s: %d segments", format_number(tau), rows[-1].segments)
            if config.svg_dir is not None:
                path = os.path.join(config.svg_dir, f"tau_{format_number(tau)}.svg")
                simplified = [outcome.simplified for outcome in outcomes]
                panel = SvgPanel(records, simplified, f"τ = {format_number(tau)}")
                _write_text(path, render_panels([panel]))

    with _open_output(config.output_path) as sink:
        write_sweep_csv(rows, sink)
    return EXIT_OK


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return format_number(value)
    return str(value)


class Comparison(NamedTuple):
    index: int
    feature_id: Any
    engine: QualityReport
    rdp: QualityReport

    def csv_values(self) -> List[Any]:
        return [
            self.index,
            self.feature_id,
            self.engine.segment_count_before,
            self.engine.segment_count_after,
            self.rdp.segment_count_after,
            self.engine.hausdorff,
            self.rdp.hausdorff,
            self.engine.right_angle_fraction_before,
            self.engine.right_angle_fraction_after,
            self.rdp.right_angle_fraction_after,
            self.engine.vanished,
            self.rdp.vanished,
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "id": self.feature_id,
            "spatial_property": self.engine.to_dict(),
            "rdp": self.rdp.to_dict(),
        }


def _comparison_totals(comparisons: Sequence[Comparison]) -> Dict[str, Any]:
    engines = [comparison.engine for comparison in comparisons]
    baselines = [comparison.rdp for comparison in comparisons]
    return {
        "segments_original": sum(report.segment_count_before for report in engines),
        "segments_spatial_property": sum(report.segment_count_after for report in engines),
        "segments_rdp": sum(report.segment_count_after for report in baselines),
        "hausdorff_spatial_property": max((report.hausdorff for report in engines), default=0.0),
        "hausdorff_rdp": max((report.hausdorff for report in baselines), default=0.0),
        "vanished_spatial_property": sum(report.vanished for report in engines),
        "vanished_rdp": sum(report.vanished for report in baselines),
    }


def cmd_compare(config: CliConfig) -> int:
    """
    Run the engine and the RDP baseline on every feature and report their quality side by
    side, followed by totals over all features.
    """
    records = _read_records(config)
    params = config.simplify_params()
    baseline = RdpSimplifier(config.rdp_params())
    outcomes = _simplify_all(records, params, config.threads)
    baselines = _map_ordered(
        partial(_baseline_record, simplifier=baseline), records, config.threads
    )

    comparisons = []
    for index, (outcome, rdp_record) in enumerate(zip(outcomes, baselines)):
        engine = outcome.quality()
        if engine is None or outcome.original.polygon is None:
            continue
        rdp_after = rdp_record.polygon.exterior if rdp_record.polygon is not None else None
        rdp = quality_report(outcome.original.polygon.exterior, rdp_after)
        comparisons.append(Comparison(index, outcome.original.id, engine, rdp))
    totals = _comparison_totals(comparisons)

    with _open_output(config.output_path) as sink:
        if config.report_format == "json":
            document = {
                "parameters": {
                    "spatial_property": params.to_dict(),
                    "rdp": {"tolerance": baseline.params.tolerance},
                },
                "features": [comparison.to_dict() for comparison in comparisons],
                "totals": totals,
            }
            sink.write(json.dumps(document, indent=2) + "\n")
        else:
            writer = csv.writer(sink)
            writer.writerow(COMPARE_CSV_HEADER)
            for comparison in comparisons:
                writer.writerow([_csv_value(value) for value in comparison.csv_values()])
            total_values = {"index": "total", **totals}
            writer.writerow([_csv_value(total_values.get(column)) for column in COMPARE_CSV_HEADER])

    if config.svg_path is not None:
        simplified = [outcome.simplified for outcome in outcomes]
        panels = [
            SvgPanel(records, title="original"),
            SvgPanel(records, simplified, f"τ = {format_number(params.tau)}"),
            SvgPanel(records, baselines, f"RDP {format_number(baseline.params.tolerance)}"),
        ]
        if records:
            _write_text(config.svg_path, render_panels(panels))
        else:
            logger.warning("No features, skipping %s", config.svg_path)

    logger.info(
        "Compared %d features: %d / %d / %d segments",
        len(comparisons),
        totals["segments_original"],
        totals["segments_spatial_property"],
        totals["segments_rdp"],
    )
    return EXIT_OK


def cmd_render(config: CliConfig) -> int:
    """Draw the input, overlaid with its simplification when a threshold is given."""
    records = _read_records(config)
    after = None
    if config.tau is not None:
        outcomes = _simplify_all(records, config.simplify_params(), config.threads)
        after = [outcome.simplified for outcome in outcomes]
    svg = render_svg(records, after)
    _write_text(config.output_path, svg)
    return EXIT_OK


class GammaType(click.ParamType):
    """A non-negative number or the word "dynamic"."""

    name = "gamma"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Any:
        if isinstance(value, (int, float)):
            return float(value)
        if value == "dynamic":
            return value
        try:
            return float(value)
        except ValueError:
            self.fail(f'{value!r} is neither a number nor "dynamic"', param, ctx)


class FootprintCli(click.Group):
    """Click group that turns failures into the exit codes 0 / 1 / 2 / 64."""

    def main(  # type: ignore[override]
        self,
        args: Optional[Sequence[str]] = None,
        prog_name: Optional[str] = None,
        complete_var: Optional[str] = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> int:
        try:
            result = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
            code = result if isinstance(result, int) else EXIT_OK
        except click.UsageError as error:
            error.show()
            code = EXIT_USAGE
        except ParameterOutOfRange as error:
            click.echo(f"Error: {error}", err=True)
            code = EXIT_USAGE
        except ParseError as error:
            click.echo(f"Error: could not parse input: {error}", err=True)
            code = EXIT_PARSE
        except (IoError, OSError) as error:
            click.echo(f"Error: {error}", err=True)
            code = EXIT_IO
        except (FootprintSimplifyError, click.ClickException, click.Abort) as error:
            click.echo(f"Error: {error}", err=True)
            code = EXIT_IO
        if standalone_mode:
            sys.exit(code)
        return code


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    if verbose:
        logging.getLogger("footprint_simplify").setLevel(level)


def _input_options(function: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.argument("input_path", metavar="INPUT", default="-"),
        click.option(
            "--input-format",
            type=click.Choice(["auto", "geojson", "wkt"]),
            default="auto",
            show_default=True,
        ),
        click.option(
            "--threads",
            type=click.IntRange(min=0),
            default=0,
            envvar=THREADS_ENVVAR,
            show_default=True,
            help=f"Worker threads, 0 runs sequentially. Also read from {THREADS_ENVVAR}.",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def _threshold_options(function: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option(
            "--epsilon",
            type=float,
            default=DEFAULT_EPSILON,
            show_default=True,
            help="Angle threshold for regression and translation, in radians.",
        ),
        click.option(
            "--delta",
            type=float,
            default=DEFAULT_DELTA,
            show_default=True,
            help="Collinearity window around π, in radians.",
        ),
        click.option(
            "--gamma",
            type=GammaType(),
            default=DEFAULT_GAMMA,
            show_default=True,
            help='Joining distance, or "dynamic" for the current segment length.',
        ),
        click.option(
            "--legacy-translate-sign",
            is_flag=True,
            help="Subtractive formula when translating towards the trailing neighbour.",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function


@click.group(cls=FootprintCli)
@click.version_option(__version__, prog_name="footprint-simplify")
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for every run.")
def cli(verbose: int) -> None:
    """Simplify building footprints while keeping their right angles."""
    _configure_logging(verbose)


@cli.command()
@_input_options
@click.option("-o", "--output", "output_path", default="-", show_default=True)
@click.option(
    "--output-format", type=click.Choice(["geojson", "wkt"]), default="geojson", show_default=True
)
@click.option("--tau", type=float, required=True, help="Distance threshold.")
@_threshold_options
@click.option("--report", "report_path", help="Write a JSON quality report here.")
@click.option("--svg", "svg_path", help="Write an overlay SVG here.")
@click.option("--trace", "trace_path", help="Write every edit as JSON lines here.")
@click.option("--check-validity", is_flag=True, help="Report self-intersections of the results.")
@click.option("--rfc7946", is_flag=True, help="Counterclockwise exteriors, clockwise holes.")
def simplify(**options: Any) -> int:
    """Simplify every polygon of INPUT."""
    return cmd_simplify(CliConfig("simplify", **options))


@cli.command()
@_input_options
@click.option("-o", "--output", "output_path", default="-", show_default=True, help="Sweep CSV.")
@click.option("--from", "sweep_from", type=float, required=True)
@click.option("--to", "sweep_to", type=float, required=True)
@click.option("--step", "sweep_step", type=float, required=True)
@_threshold_options
@click.option("--svg-dir", help="Write one SVG per threshold into this directory.")
def sweep(**options: Any) -> int:
    """Segment counts and errors over a range of distance thresholds."""
    return cmd_sweep(CliConfig("sweep", **options))


@cli.command()
@_input_options
@click.option("-o", "--output", "output_path", default="-", show_default=True)
@click.option("--tau", type=float, required=True)
@click.option("--rdp-tolerance", type=float, required=True)
@_threshold_options
@click.option(
    "--report-format", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)
@click.option("--svg", "svg_path", help="Write original / simplified / RDP panels here.")
def compare(**options: Any) -> int:
    """Compare the simplifier with Ramer-Douglas-Peucker."""
    return cmd_compare(CliConfig("compare", **options))


@cli.command()
@_input_options
@click.option("-o", "--output", "output_path", default="-", show_default=True, help="SVG file.")
@click.option("--tau", type=float, help="Overlay the simplification at this threshold.")
@_threshold_options
def render(**options: Any) -> int:
    """Draw INPUT as SVG."""
    return cmd_render(CliConfig("render", **options))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    return cli.main(
        args=list(argv) if argv is not None else None,
        prog_name="footprint-simplify",
        standalone_mode=False,
    )


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
