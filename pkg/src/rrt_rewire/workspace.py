"""Workspace model, collision predicate and the JSON map format.

Coordinates follow the screen convention: origin top-left, x right, y down.

Map documents are JSON objects::

    {
      "name": "example",
      "width": 600, "height": 600,
      "epsilon": 0,
      "start": [50, 50], "goal": [550, 550],
      "obstacles": [[[40, 40], [60, 40], [60, 60], [40, 60]]]
    }

``epsilon`` is optional (default 0). Vertex order may be either orientation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path as FsPath
from typing import Sequence

from .geometry import (
    EPS,
    GeometryError,
    Point2,
    Polygon,
    Segment,
    point_in_polygon,
    segment_hits_polygon,
    segment_polygon_distance,
)

BUILTIN_MAP_IDS = (1, 2, 3, 4)


class MapError(ValueError):
    """Base class for map loading problems."""


class MapParseError(MapError):
    pass


class MapValidationError(MapError):
    pass


@dataclass(frozen=True)
class WorldMap:
    width: float
    height: float
    start: Point2
    goal: Point2
    obstacles: tuple[Polygon, ...] = ()
    epsilon: float = 0.0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "start", Point2(*map(float, self.start)))
        object.__setattr__(self, "goal", Point2(*map(float, self.goal)))
        object.__setattr__(self, "obstacles", tuple(self.obstacles))
        validate(self)

    @cached_property
    def _boxes(self) -> list[tuple[float, float, float, float, Polygon, bool]]:
        return [(*poly.bbox, poly, _is_axis_aligned_rect(poly)) for poly in self.obstacles]

    def contains(self, p: Sequence[float]) -> bool:
        return 0.0 <= p[0] <= self.width and 0.0 <= p[1] <= self.height


def validate(world: WorldMap) -> None:
    if not (world.width > 0 and world.height > 0):
        raise MapValidationError(f"map size must be positive, got {world.width}x{world.height}")
    if not (world.epsilon >= 0 and math.isfinite(world.epsilon)):
        raise MapValidationError(f"epsilon must be a finite non-negative number, got {world.epsilon}")
    for label, p in (("start", world.start), ("goal", world.goal)):
        if not world.contains(p):
            raise MapValidationError(f"{label} {tuple(p)} lies outside the {world.width}x{world.height} workspace")
    for k, poly in enumerate(world.obstacles):
        for v in poly.vertices:
            if not world.contains(v):
                raise MapValidationError(f"obstacle {k} vertex {tuple(v)} lies outside the workspace")
    for label, p in (("start", world.start), ("goal", world.goal)):
        for k, poly in enumerate(world.obstacles):
            if point_in_polygon(p, poly):
                raise MapValidationError(f"{label} {tuple(p)} is inside obstacle {k}")
            if segment_polygon_distance(Segment(p, p), poly) < world.epsilon:
                raise MapValidationError(f"{label} {tuple(p)} is closer than epsilon to obstacle {k}")


def is_trapped(q1: Sequence[float], q2: Sequence[float], world: WorldMap) -> bool:
    """True iff the straight move q1 -> q2 is not free.

    With ``epsilon == 0`` this is plain contact with any obstacle; otherwise
    the segment must also keep at least ``epsilon`` px from every obstacle.
    """
    eps = world.epsilon
    pad = eps + EPS
    x1, y1 = q1[0], q1[1]
    x2, y2 = q2[0], q2[1]
    lox = (x1 if x1 < x2 else x2) - pad
    hix = (x2 if x1 < x2 else x1) + pad
    loy = (y1 if y1 < y2 else y2) - pad
    hiy = (y2 if y1 < y2 else y1) + pad
    dx = x2 - x1
    dy = y2 - y1
    for bx0, by0, bx1, by1, poly, is_rect in world._boxes:
        if bx0 > hix or bx1 < lox or by0 > hiy or by1 < loy:
            continue
        if not _segment_meets_box(x1, y1, dx, dy, bx0 - pad, by0 - pad, bx1 + pad, by1 + pad):
            continue
        if is_rect and eps == 0.0:
            # the padded slab test is already exact for an axis-aligned box
            return True
        if eps > 0.0:
            if segment_polygon_distance(Segment(q1, q2), poly) < eps:
                return True
        elif segment_hits_polygon(q1, q2, poly):
            return True
    return False


def _is_axis_aligned_rect(poly: Polygon) -> bool:
    v = poly.vertices
    if len(v) != 4:
        return False
    xs = {p.x for p in v}
    ys = {p.y for p in v}
    return len(xs) == 2 and len(ys) == 2 and len(set(v)) == 4


def _segment_meets_box(x, y, dx, dy, x0, y0, x1, y1) -> bool:
    """Slab test for the segment (x, y) + s*(dx, dy), s in [0, 1], against a closed box."""
    lo, hi = 0.0, 1.0
    for p, d, b0, b1 in ((x, dx, x0, x1), (y, dy, y0, y1)):
        if d == 0.0:
            if p < b0 or p > b1:
                return False
            continue
        s0 = (b0 - p) / d
        s1 = (b1 - p) / d
        if s0 > s1:
            s0, s1 = s1, s0
        if s0 > lo:
            lo = s0
        if s1 < hi:
            hi = s1
        if lo > hi:
            return False
    return True


def _point(value, what: str) -> Point2:
    if not (isinstance(value, (list, tuple)) and len(value) == 2):
        raise MapParseError(f"{what} must be an [x, y] pair, got {value!r}")
    try:
        x, y = float(value[0]), float(value[1])
    except (TypeError, ValueError):
        raise MapParseError(f"{what} has non-numeric coordinates: {value!r}") from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise MapParseError(f"{what} has non-finite coordinates: {value!r}")
    return Point2(x, y)


def _number(doc: dict, key: str, default=None) -> float:
    if key not in doc:
        if default is None:
            raise MapParseError(f"missing field {key!r}")
        return default
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MapParseError(f"field {key!r} must be a number, got {value!r}")
    return float(value)


def parse_map(doc: dict) -> WorldMap:
    if not isinstance(doc, dict):
        raise MapParseError("map document must be a JSON object")
    for key in ("start", "goal"):
        if key not in doc:
            raise MapParseError(f"missing field {key!r}")
    raw_obstacles = doc.get("obstacles", [])
    if not isinstance(raw_obstacles, list):
        raise MapParseError("field 'obstacles' must be a list of polygons")
    polygons = []
    for k, raw in enumerate(raw_obstacles):
        if not isinstance(raw, list):
            raise MapParseError(f"obstacle {k} must be a list of [x, y] vertices")
        verts = [_point(v, f"obstacle {k} vertex {i}") for i, v in enumerate(raw)]
        try:
            polygons.append(Polygon(tuple(verts)))
        except GeometryError as exc:
            raise MapValidationError(f"obstacle {k}: {exc}") from None
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise MapParseError(f"field 'name' must be text, got {name!r}")
    return WorldMap(
        width=_number(doc, "width"),
        height=_number(doc, "height"),
        start=_point(doc["start"], "start"),
        goal=_point(doc["goal"], "goal"),
        obstacles=tuple(polygons),
        epsilon=_number(doc, "epsilon", 0.0),
        name=name,
    )


def load_map(source: str) -> WorldMap:
    """Parse map JSON text into a validated :class:`WorldMap`."""
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise MapParseError(f"malformed map JSON: {exc}") from None
    return parse_map(doc)


def load_map_file(path) -> WorldMap:
    path = FsPath(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MapParseError(f"cannot read map file {str(path)!r}: {exc.strerror}") from None
    try:
        return load_map(text)
    except MapError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def map_to_dict(world: WorldMap) -> dict:
    return {
        "name": world.name,
        "width": world.width,
        "height": world.height,
        "epsilon": world.epsilon,
        "start": list(world.start),
        "goal": list(world.goal),
        "obstacles": [[list(v) for v in poly.vertices] for poly in world.obstacles],
    }


def save_map(world: WorldMap) -> str:
    # json writes floats with repr, which round-trips bit-exactly
    return json.dumps(map_to_dict(world), indent=1)


def builtin_map(map_id: int) -> WorldMap:
    if map_id not in BUILTIN_MAP_IDS:
        raise KeyError(f"unknown built-in map {map_id!r}; expected one of {BUILTIN_MAP_IDS}")
    text = resources.files(__package__).joinpath("maps", f"map{map_id}.json").read_text()
    return load_map(text)


def resolve_map(selector: str) -> WorldMap:
    """Accept ``builtin:N`` or a filesystem path."""
    if selector.startswith("builtin:"):
        try:
            map_id = int(selector.split(":", 1)[1])
        except ValueError:
            raise MapParseError(f"bad built-in map selector {selector!r}") from None
        try:
            return builtin_map(map_id)
        except KeyError as exc:
            raise MapParseError(exc.args[0]) from None
    return load_map_file(selector)
