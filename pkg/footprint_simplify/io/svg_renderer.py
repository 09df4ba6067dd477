"""
Static SVG figures of footprints before and after simplification.
"""

import re
import uuid
from dataclasses import dataclass
from typing import Optional, Sequence, Union
from xml.sax.saxutils import escape

from footprint_simplify.exceptions import IoError, NothingToRender
from footprint_simplify.geometry.primitives import Point
from footprint_simplify.geometry.ring import PolygonRings, bounding_box
from footprint_simplify.io.features import FeatureRecord
from footprint_simplify.io.numbers import format_number

UNIQUE_ID_KEYS = ["vanishedHatch", "layer", "before", "after", "vanished", "notes", "title"]
PANEL_GAP = 20
TITLE_HEIGHT = 24


@dataclass(frozen=True)
class SvgStyle:
    width: int = 800
    before_color: str = "#9ca3af"
    after_color: str = "#111827"
    stroke_width: float = 1.5
    margin_ratio: float = 0.05


@dataclass(frozen=True)
class SvgPanel:
    """
    One drawing area. `before` is drawn in gray under `after` when both are given; a
    panel without `after` draws `before` alone in the foreground color.
    """

    before: Sequence[FeatureRecord]
    after: Optional[Sequence[FeatureRecord]] = None
    title: Optional[str] = None


class FootprintSvgRenderer:
    """
    Renders one or more panels that share a single coordinate frame.

    The frame is the bounding box of every live ring plus a margin of 5% of its larger
    side. Map y grows upwards, so each panel flips its content vertically.

    Example:

        >>> renderer = FootprintSvgRenderer([SvgPanel(before=records, after=simplified)])
        >>> svg_content = renderer.generate_svg()
        >>> renderer.save_to_file("notch.svg")
    """

    def __init__(self, panels: Sequence[SvgPanel], style: SvgStyle = SvgStyle()):
        if not panels or not any(panel.before or panel.after for panel in panels):
            raise NothingToRender("There are no records to render")
        self.panels = list(panels)
        self.style = style

    def view_box(self) -> Optional[tuple[float, float, float, float]]:
        points = [
            point
            for panel in self.panels
            for records in (panel.before, panel.after or [])
            for record in records
            if record.polygon is not None
            for point in record.polygon.exterior.points()
        ]
        if not points:
            return None
        min_x, min_y, max_x, max_y = bounding_box(points)
        margin = self.style.margin_ratio * max(max_x - min_x, max_y - min_y)
        return (
            min_x - margin,
            min_y - margin,
            max_x - min_x + 2 * margin,
            max_y - min_y + 2 * margin,
        )

    def _path_data(self, polygon: PolygonRings) -> str:
        commands = []
        for ring in polygon.rings():
            points = ring.oriented_points()
            coordinates = " L ".join(_coordinate(point) for point in points)
            commands.append(f"M {coordinates} Z")
        return " ".join(commands)

    def _layer(self, records: Sequence[FeatureRecord], role: str, hatch: Sequence[bool]) -> str:
        paths = []
        for record, vanished in zip(records, hatch):
            if record.polygon is None:
                continue
            classes = f"{role} vanished" if vanished else role
            paths.append(f'<path class="{classes}" d="{self._path_data(record.polygon)}"/>')
        return f'<g class="layer {role}">\n        ' + "\n        ".join(paths) + "\n      </g>"

    def _panel_content(self, panel: SvgPanel, flip: float) -> str:
        layers = []
        if panel.after is None:
            layers.append(self._layer(panel.before, "after", [False] * len(panel.before)))
        else:
            after = list(panel.after)
            vanished = [
                index < len(after) and after[index].polygon is None
                for index in range(len(panel.before))
            ]
            layers.append(self._layer(panel.before, "before", vanished))
            layers.append(self._layer(after, "after", [False] * len(after)))
        body = "\n      ".join(layers)
        transform = f"translate(0 {format_number(flip)}) scale(1 -1)"
        return f'<g transform="{transform}">\n      {body}\n    </g>'

    def _notes(self, view_box: tuple[float, float, float, float]) -> str:
        x, y, width, height = view_box
        font_size = format_number(height / 20)
        return (
            f'<g id="notes" class="notes">\n'
            f'      <text x="{format_number(x + width / 2)}" y="{format_number(y + height / 2)}" '
            f'font-size="{font_size}" text-anchor="middle">all geometries vanished</text>\n'
            f"    </g>"
        )

    def generate_svg(self, unique_id: Union[bool, str] = True) -> str:
        """
        Generate the complete SVG string.

        Args:
            unique_id: Controls ID uniqueness behavior:
                - False: Use default IDs (may cause collisions)
                - True: Generate random suffix for unique IDs
                - str: Use provided string as suffix for IDs

        Returns:
            SVG string with optionally unique identifiers
        """
        view_box = self.view_box()
        all_vanished = view_box is None
        if view_box is None:
            view_box = (0.0, 0.0, 1.0, 1.0)
        x, y, width, height = view_box
        flip = 2 * y + height

        panel_width = self.style.width
        panel_height = max(1, round(panel_width * height / width))
        has_titles = any(panel.title for panel in self.panels)
        title_height = TITLE_HEIGHT if has_titles else 0
        total_width = len(self.panels) * panel_width + (len(self.panels) - 1) * PANEL_GAP
        total_height = panel_height + title_height

        numbers = " ".join(format_number(value) for value in view_box)
        panels = []
        for index, panel in enumerate(self.panels):
            offset = index * (panel_width + PANEL_GAP)
            content = self._notes(view_box) if all_vanished else self._panel_content(panel, flip)
            title = ""
            if panel.title:
                title = (
                    f'<text class="title" x="{offset + panel_width // 2}" y="{TITLE_HEIGHT - 6}" '
                    f'text-anchor="middle">{escape(panel.title)}</text>\n  '
                )
            panels.append(
                f"{title}<svg x=\"{offset}\" y=\"{title_height}\" width=\"{panel_width}\" "
                f"height=\"{panel_height}\" viewBox=\"{numbers}\">\n    {content}\n  </svg>"
            )

        svg = f"""<svg width="{total_width}" height="{total_height}" viewBox="0 0 {total_width} {total_height}" xmlns="http://www.w3.org/2000/svg">
  <defs>
    <pattern id="vanishedHatch" patternUnits="userSpaceOnUse" width="8" height="8" patternTransform="rotate(45)">
      <line x1="0" y1="0" x2="0" y2="8" stroke="{self.style.before_color}" stroke-width="2"/>
    </pattern>
  </defs>

  <style>
    .before {{
      stroke: {self.style.before_color};
      stroke-width: {self.style.stroke_width};
      stroke-linejoin: round;
      fill: none;
      fill-rule: evenodd;
      vector-effect: non-scaling-stroke;
    }}

    .after {{
      stroke: {self.style.after_color};
      stroke-width: {self.style.stroke_width};
      stroke-linejoin: round;
      fill: none;
      fill-rule: evenodd;
      vector-effect: non-scaling-stroke;
    }}

    .vanished {{
      fill: url(#vanishedHatch);
    }}

    .title {{
      font-family: sans-serif;
      font-size: 14px;
    }}

    .notes {{
      font-family: sans-serif;
      fill: {self.style.before_color};
    }}
  </style>

  {chr(10).join(panels)}
</svg>
"""

        if unique_id is not False:
            suffix = uuid.uuid4().hex[:6] if unique_id is True else str(unique_id)
            svg = _apply_unique_suffix(svg, suffix, UNIQUE_ID_KEYS)
        return svg

    def save_to_file(self, file_path: str, unique_id: Union[bool, str] = True) -> None:
        """Save the generated SVG to a file."""
        svg_content = self.generate_svg(unique_id=unique_id)
        try:
            with open(file_path, "w", encoding="utf-8") as file:
                file.write(svg_content)
        except OSError as error:
            raise IoError(f"Could not write {file_path}: {error}") from error


def _coordinate(point: Point) -> str:
    return f"{format_number(point.x)} {format_number(point.y)}"


def _apply_unique_suffix(svg: str, suffix: str, id_keys: list[str]) -> str:
    """
    Append a suffix to ids, CSS classes and their references so that several figures
    can be inlined into one page.
    """
    modified_svg = svg
    for base_id in id_keys:
        unique_id = f"{base_id}-{suffix}"

        # id="baseId" -> id="baseId-suffix"
        modified_svg = re.sub(rf'id="{re.escape(base_id)}"', f'id="{unique_id}"', modified_svg)

        # url(#baseId) -> url(#baseId-suffix)
        modified_svg = re.sub(
            rf"url\(#{re.escape(base_id)}\)", f"url(#{unique_id})", modified_svg
        )

        # .baseId { -> .baseId-suffix {
        modified_svg = re.sub(
            rf"\.{re.escape(base_id)}(?=\s*\{{)", f".{unique_id}", modified_svg
        )

        # class="a baseId b" -> class="a baseId-suffix b"
        modified_svg = re.sub(
            rf'class="([^"]*?)(?<![\w-])({re.escape(base_id)})(?![\w-])([^"]*?)"',
            rf'class="\g<1>{unique_id}\g<3>"',
            modified_svg,
        )
    return modified_svg


def render_svg(
    records_before: Sequence[FeatureRecord],
    records_after: Optional[Sequence[FeatureRecord]] = None,
    style: SvgStyle = SvgStyle(),
    unique_id: Union[bool, str] = False,
) -> str:
    """
    Overlay simplified records (black) on the originals (gray).

    Originals whose simplification vanished are hatched. Without `records_after` only
    the originals are drawn.

    Raises:
        NothingToRender: if there are no records at all.
    """
    panel = SvgPanel(before=list(records_before), after=records_after)
    return FootprintSvgRenderer([panel], style).generate_svg(unique_id=unique_id)


def render_panels(
    panels: Sequence[SvgPanel],
    style: SvgStyle = SvgStyle(),
    unique_id: Union[bool, str] = False,
) -> str:
    """Side-by-side panels in a shared frame, e.g. original / simplified / baseline."""
    return FootprintSvgRenderer(panels, style).generate_svg(unique_id=unique_id)
