"""
Feature records and their GeoJSON / WKT serialization.
"""

import json
import logging
from dataclasses import dataclass, replace
from typing import IO, Any, Dict, Iterable, List, Optional, Sequence, Union

from footprint_simplify.constants import GEOMETRY_FORMATS, OUTPUT_FORMATS
from footprint_simplify.exceptions import (
    GeometryError,
    IoError,
    ParseError,
    UnserializableValue,
)
from footprint_simplify.geometry.primitives import Point
from footprint_simplify.geometry.ring import PolygonRings, Ring, ring_from_points
from footprint_simplify.io.numbers import json_number
from footprint_simplify.io.wkt import RawPolygon, format_polygon, parse_wkt

logger = logging.getLogger(__name__)

Source = Union[str, bytes, IO[str], IO[bytes]]
FeatureId = Union[str, int, None]


@dataclass
class FeatureRecord:
    """
    One polygon with the properties and id of the feature it came from.

    Parts of a multipolygon become separate records with ids "<id>-<part>". A record
    whose `polygon` is None stands for a geometry that vanished.
    """

    polygon: Optional[PolygonRings]
    properties: Optional[Dict[str, Any]] = None
    id: FeatureId = None
    part: Optional[int] = None

    @property
    def vanished(self) -> bool:
        return self.polygon is None

    def with_polygon(self, polygon: Optional[PolygonRings]) -> "FeatureRecord":
        return replace(self, polygon=polygon)


def _read_text(source: Source) -> str:
    if isinstance(source, str):
        return source
    if isinstance(source, bytes):
        raw: Union[str, bytes] = source
    else:
        try:
            raw = source.read()
        except OSError as error:
            raise IoError(f"Could not read input: {error}") from error
    if isinstance(raw, bytes):
        try:
            return raw.decode("utf-8-sig")
        except UnicodeDecodeError as error:
            raise ParseError(f"Input is not UTF-8: {error.reason}", 1, error.start) from error
    return raw


def _detect_format(text: str) -> Optional[str]:
    stripped = text.lstrip("\ufeff \t\r\n")
    if not stripped:
        return None
    if stripped[0] == "{":
        return "geojson"
    if stripped[0].isalpha():
        return "wkt"
    consumed = text[: len(text) - len(stripped)]
    raise ParseError(
        f"Cannot detect format from leading character {stripped[0]!r}",
        consumed.count("\n") + 1,
        len(consumed) - (consumed.rfind("\n") + 1),
    )


def _polygon_from_raw(raw: RawPolygon, where: str) -> PolygonRings:
    try:
        rings = [ring_from_points(ring) for ring in raw]
    except GeometryError as error:
        raise ParseError(f"Invalid polygon in {where}: {error}") from error
    return PolygonRings(rings[0], rings[1:])


class FeatureReader:
    """
    Reads polygon records from GeoJSON or WKT text.

    `skipped_count` accumulates the number of non-areal geometries skipped over all
    documents read by this reader.
    """

    def __init__(self, geometry_format: GEOMETRY_FORMATS = "auto"):
        self.geometry_format = geometry_format
        self.skipped_count = 0

    def read(self, source: Source) -> List[FeatureRecord]:
        text = _read_text(source)
        geometry_format = self.geometry_format
        if geometry_format == "auto":
            detected = _detect_format(text)
            if detected is None:
                return []
            geometry_format = detected  # type: ignore[assignment]
        elif not text.strip():
            return []
        if geometry_format == "geojson":
            return self._read_geojson(text)
        if geometry_format == "wkt":
            return self._read_wkt(text)
        raise ValueError(f"Unsupported geometry format: {geometry_format}")

    def _read_wkt(self, text: str) -> List[FeatureRecord]:
        document = parse_wkt(text)
        self.skipped_count += document.skipped_count
        records = []
        for raw, (index, part) in zip(document.polygons, document.sources):
            where = f"geometry {index + 1}" if part is None else f"geometry {index + 1} part {part}"
            records.append(FeatureRecord(_polygon_from_raw(raw, where), part=part))
        return records

    def _read_geojson(self, text: str) -> List[FeatureRecord]:
        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise ParseError(error.msg, error.lineno, error.colno - 1) from error
        if not isinstance(document, dict):
            raise ParseError("GeoJSON document must be an object")

        document_type = document.get("type")
        if document_type == "FeatureCollection":
            features = document.get("features")
            if not isinstance(features, list):
                raise ParseError("FeatureCollection needs a 'features' array")
            records: List[FeatureRecord] = []
            for index, feature in enumerate(features):
                records.extend(self._feature(feature, f"feature {index}"))
            return records
        if document_type == "Feature":
            return self._feature(document, "feature 0")
        return [
            FeatureRecord(polygon, part=part)
            for part, polygon in self._geometry(document, "geometry")
        ]

    def _feature(self, feature: Any, where: str) -> List[FeatureRecord]:
        if not isinstance(feature, dict) or feature.get("type") != "Feature":
            raise ParseError(f"Expected a Feature object in {where}")
        properties = feature.get("properties")
        if properties is not None and not isinstance(properties, dict):
            raise ParseError(f"Feature properties must be an object or null in {where}")
        feature_id = feature.get("id")
        if feature_id is not None and (
            isinstance(feature_id, bool) or not isinstance(feature_id, (str, int, float))
        ):
            raise ParseError(f"Feature id must be a string or a number in {where}")
        if "geometry" not in feature:
            raise ParseError(f"Feature has no 'geometry' member in {where}")
        geometry = feature["geometry"]
        if geometry is None:
            return [FeatureRecord(None, properties, feature_id)]

        parts = self._geometry(geometry, where)
        records = []
        for part, polygon in parts:
            record_id = feature_id
            if part is not None and feature_id is not None:
                record_id = f"{feature_id}-{part}"
            records.append(FeatureRecord(polygon, properties, record_id, part))
        return records

    def _geometry(self, geometry: Any, where: str) -> List[tuple[Optional[int], PolygonRings]]:
        if not isinstance(geometry, dict) or not isinstance(geometry.get("type"), str):
            raise ParseError(f"Expected a geometry object in {where}")
        geometry_type = geometry["type"]
        if geometry_type == "GeometryCollection":
            members = geometry.get("geometries")
            if not isinstance(members, list):
                raise ParseError(f"GeometryCollection needs a 'geometries' array in {where}")
            polygons = []
            for member in members:
                polygons.extend(polygon for _, polygon in self._geometry(member, where))
            return list(enumerate(polygons))  # type: ignore[arg-type]
        if geometry_type not in ("Polygon", "MultiPolygon"):
            self.skipped_count += 1
            logger.warning("Skipping non-areal %s in %s", geometry_type, where)
            return []

        coordinates = geometry.get("coordinates")
        if geometry_type == "Polygon":
            raw_polygons = [_raw_polygon(coordinates, where)] if coordinates else []
            return [(None, _polygon_from_raw(raw, where)) for raw in raw_polygons]
        if not isinstance(coordinates, list):
            raise ParseError(f"MultiPolygon coordinates must be an array in {where}")
        return [
            (part, _polygon_from_raw(_raw_polygon(polygon, where), f"{where} part {part}"))
            for part, polygon in enumerate(coordinates)
        ]


def _raw_polygon(coordinates: Any, where: str) -> RawPolygon:
    if not isinstance(coordinates, list) or not coordinates:
        raise ParseError(f"Polygon coordinates must be a non-empty array in {where}")
    rings = []
    for ring in coordinates:
        if not isinstance(ring, list) or len(ring) < 3:
            raise ParseError(f"A polygon ring needs at least 3 positions in {where}")
        rings.append([_position(position, where) for position in ring])
    return rings


def _position(position: Any, where: str) -> tuple[float, float]:
    if (
        not isinstance(position, list)
        or not 2 <= len(position) <= 4
        or any(isinstance(value, bool) or not isinstance(value, (int, float)) for value in position)
    ):
        raise ParseError(f"Invalid position {position!r} in {where}")
    return float(position[0]), float(position[1])


def read_features(
    source: Source, geometry_format: GEOMETRY_FORMATS = "auto"
) -> List[FeatureRecord]:
    """
    Read polygon records from GeoJSON or WKT.

    Args:
        source: Text, bytes or a readable stream
        geometry_format: "geojson", "wkt", or "auto" to detect the format from the
            leading character

    Returns:
        One record per polygon. Empty input yields an empty list

    Raises:
        ParseError: on malformed input, with line and offset where known
    """
    return FeatureReader(geometry_format).read(source)


def _oriented_ring(ring: Ring, counterclockwise: Optional[bool]) -> List[Point]:
    points = ring.oriented_points()
    if counterclockwise is None or counterclockwise != ring.was_clockwise:
        return points
    return [points[0]] + points[:0:-1]


def _rings_for_output(polygon: PolygonRings, rfc7946: bool) -> List[List[Point]]:
    if not rfc7946:
        return [ring.oriented_points() for ring in polygon.rings()]
    return [_oriented_ring(polygon.exterior, True)] + [
        _oriented_ring(hole, False) for hole in polygon.holes
    ]


def _geojson_ring(points: Sequence[Point]) -> List[List[Union[int, float]]]:
    closed = list(points) + [points[0]]
    return [[json_number(point.x), json_number(point.y)] for point in closed]


def feature_to_geojson(record: FeatureRecord, rfc7946: bool = False) -> Dict[str, Any]:
    feature: Dict[str, Any] = {"type": "Feature"}
    if record.id is not None:
        feature["id"] = record.id
    feature["properties"] = record.properties
    if record.polygon is None:
        feature["geometry"] = None
    else:
        feature["geometry"] = {
            "type": "Polygon",
            "coordinates": [
                _geojson_ring(ring) for ring in _rings_for_output(record.polygon, rfc7946)
            ],
        }
    return feature


def write_features(
    records: Iterable[FeatureRecord],
    output_format: OUTPUT_FORMATS,
    sink: IO[str],
    rfc7946: bool = False,
) -> None:
    """
    Write records as a GeoJSON FeatureCollection or as WKT, one geometry per line.

    Rings are closed and keep the orientation they were read with, unless `rfc7946` asks
    for counterclockwise exteriors and clockwise holes. Vanished records become
    null-geometry features in GeoJSON and are skipped in WKT.

    Raises:
        UnserializableValue: if a property is NaN or infinite, which JSON cannot hold.
        IoError: if writing to the sink fails.
    """
    records = list(records)
    if output_format == "geojson":
        collection = {
            "type": "FeatureCollection",
            "features": [feature_to_geojson(record, rfc7946) for record in records],
        }
        try:
            text = json.dumps(collection, ensure_ascii=False, allow_nan=False) + "\n"
        except ValueError as error:
            raise UnserializableValue(f"Cannot write GeoJSON: {error}") from error
    elif output_format == "wkt":
        lines = []
        for index, record in enumerate(records):
            if record.polygon is None:
                logger.warning("Skipping vanished record %d in WKT output", index)
                continue
            lines.append(format_polygon(_rings_for_output(record.polygon, rfc7946)) + "\n")
        text = "".join(lines)
    else:
        raise ValueError(f"Unsupported output format: {output_format}")
    try:
        sink.write(text)
        sink.flush()
    except OSError as error:
        raise IoError(f"Could not write output: {error}") from error
