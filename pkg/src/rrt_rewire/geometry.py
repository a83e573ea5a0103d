"""Planar geometry primitives in pixel coordinates.

Orientation tests treat cross products with magnitude <= ``EPS`` as
collinear. Obstacles are closed sets: touching a boundary counts as contact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

EPS = 1e-9


class Point2(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point2
    b: Point2


class GeometryError(ValueError):
    pass


def distance(p: Sequence[float], q: Sequence[float]) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


def cross(o: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """Twice the signed area of triangle (o, a, b); positive when a->b turns left around o."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(o, a, b) -> int:
    c = cross(o, a, b)
    if c > EPS:
        return 1
    if c < -EPS:
        return -1
    return 0


def _within_box(p, a, b) -> bool:
    # p is assumed collinear with a-b
    return (
        min(a[0], b[0]) - EPS <= p[0] <= max(a[0], b[0]) + EPS
        and min(a[1], b[1]) - EPS <= p[1] <= max(a[1], b[1]) + EPS
    )


def point_on_segment(p, a, b) -> bool:
    return orientation(a, b, p) == 0 and _within_box(p, a, b)


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    return _intersect(s1[0], s1[1], s2[0], s2[1])


def _intersect(p1, p2, p3, p4) -> bool:
    o1 = orientation(p1, p2, p3)
    o2 = orientation(p1, p2, p4)
    o3 = orientation(p3, p4, p1)
    o4 = orientation(p3, p4, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _within_box(p3, p1, p2):
        return True
    if o2 == 0 and _within_box(p4, p1, p2):
        return True
    if o3 == 0 and _within_box(p1, p3, p4):
        return True
    if o4 == 0 and _within_box(p2, p3, p4):
        return True
    return False


def point_segment_distance(p, a, b) -> float:
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    den = dx * dx + dy * dy
    if den == 0.0:
        return distance(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / den
    t = min(1.0, max(0.0, t))
    return math.hypot(a[0] + t * dx - p[0], a[1] + t * dy - p[1])


def signed_area(vertices: Sequence[Sequence[float]]) -> float:
    n = len(vertices)
    acc = 0.0
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        acc += x0 * y1 - x1 * y0
    return 0.5 * acc


@dataclass(frozen=True)
class Polygon:
    """Simple polygon; vertices are kept with positive signed area.

    With the y-down screen convention, positive signed area reads clockwise
    on screen, but it is the counter-clockwise order of the underlying
    right-handed formula and is what every predicate here assumes.
    """

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        verts = tuple(Point2(float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise GeometryError(f"polygon needs at least 3 vertices, got {len(verts)}")
        if not all(math.isfinite(c) for v in verts for c in v):
            raise GeometryError("polygon has a non-finite coordinate")
        area = signed_area(verts)
        if abs(area) <= EPS:
            raise GeometryError("polygon has zero area")
        if area < 0:
            verts = verts[::-1]
        if not _is_simple(verts):
            raise GeometryError("polygon is not simple")
        object.__setattr__(self, "vertices", verts)

    def edges(self) -> Iterable[tuple[Point2, Point2]]:
        v = self.vertices
        n = len(v)
        for i in range(n):
            yield v[i], v[(i + 1) % n]

    @property
    def bbox(self) -> tuple[float, float, float, float]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def _is_simple(verts: Sequence[Point2]) -> bool:
    n = len(verts)
    for i in range(n):
        # consecutive edges p-s, s-q must not fold back onto each other
        p, s, q = verts[i - 1], verts[i], verts[(i + 1) % n]
        if point_on_segment(q, p, s) or point_on_segment(p, s, q):
            return False
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _intersect(verts[i], verts[i + 1], verts[j], verts[(j + 1) % n]):
                return False
    return True


def point_in_polygon(p: Sequence[float], poly: Polygon) -> bool:
    """Boundary counts as inside. Interior test is even-odd ray casting."""
    inside = False
    px, py = p[0], p[1]
    for a, b in poly.edges():
        if point_on_segment(p, a, b):
            return True
        if (a.y > py) != (b.y > py):
            x_cross = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y)
            if px < x_cross:
                inside = not inside
    return inside


def segment_hits_polygon(a, b, poly: Polygon) -> bool:
    """True iff segment a-b touches the boundary of poly or lies inside it."""
    for u, v in poly.edges():
        if _intersect(a, b, u, v):
            return True
    # no boundary contact: either fully inside or fully outside
    return point_in_polygon(a, poly)


def segment_polygon_distance(s: Segment, poly: Polygon) -> float:
    """Minimum distance between segment s and the closed region of poly."""
    a, b = s[0], s[1]
    if segment_hits_polygon(a, b, poly):
        return 0.0
    best = math.inf
    for u, v in poly.edges():
        best = min(
            best,
            point_segment_distance(a, u, v),
            point_segment_distance(b, u, v),
            point_segment_distance(u, a, b),
        )
    return best
