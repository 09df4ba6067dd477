from .features import FeatureReader, FeatureRecord, read_features, write_features
from .numbers import format_number
from .svg_renderer import FootprintSvgRenderer, SvgPanel, SvgStyle, render_panels, render_svg
from .sweep_csv import SweepRow, read_sweep_csv, write_sweep_csv
from .wkt import format_polygon, parse_wkt

__all__ = [
    "FeatureReader",
    "FeatureRecord",
    "read_features",
    "write_features",
    "format_number",
    "FootprintSvgRenderer",
    "SvgPanel",
    "SvgStyle",
    "render_panels",
    "render_svg",
    "SweepRow",
    "read_sweep_csv",
    "write_sweep_csv",
    "format_polygon",
    "parse_wkt",
]
