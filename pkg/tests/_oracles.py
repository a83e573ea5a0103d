"""Independent brute-force oracles. Nothing here calls into the predicates it checks."""

from __future__ import annotations

import math
import random

import numpy as np

from rrt_rewire.geometry import Point2, Polygon
from rrt_rewire.workspace import WorldMap, is_trapped


def ray_cast_inside(p, verts) -> bool:
    """Even-odd ray casting along +x (interior only; boundary undefined)."""
    x, y = p
    inside = False
    n = len(verts)
    j = n - 1
    for i in range(n):
        xi, yi = verts[i]
        xj, yj = verts[j]
        if (yi > y) != (yj > y) and x < (xj - xi) * (y - yi) / (yj - yi) + xi:
            inside = not inside
        j = i
    return inside


def winding_number(p, verts) -> int:
    x, y = p
    wn = 0
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        left = (x1 - x0) * (y - y0) - (x - x0) * (y1 - y0)
        if y0 <= y:
            if y1 > y and left > 0:
                wn += 1
        elif y1 <= y and left < 0:
            wn -= 1
    return wn


def _pt_seg(p, a, b) -> float:
    ax, ay = a
    bx, by = b
    vx, vy = bx - ax, by - ay
    L = vx * vx + vy * vy
    s = 0.0 if L == 0 else max(0.0, min(1.0, ((p[0] - ax) * vx + (p[1] - ay) * vy) / L))
    return math.hypot(ax + s * vx - p[0], ay + s * vy - p[1])


def boundary_distance(p, verts) -> float:
    n = len(verts)
    return min(_pt_seg(p, verts[i], verts[(i + 1) % n]) for i in range(n))


def sample_segment(a, b, n: int):
    return [(a[0] + (b[0] - a[0]) * k / (n - 1), a[1] + (b[1] - a[1]) * k / (n - 1)) for k in range(n)]


def dense_segment_polygon_distance(a, b, verts, n: int = 4001) -> float:
    """Sample the segment and the polygon boundary densely; each sample measures
    its distance to the other shape. Zero if a segment sample falls inside."""
    k = np.arange(n) / (n - 1)
    xs = a[0] + (b[0] - a[0]) * k
    ys = a[1] + (b[1] - a[1]) * k
    if _inside_many(xs, ys, verts).any():
        return 0.0
    best = float(_boundary_distance_many(xs, ys, verts).min())
    m = len(verts)
    for i in range(m):
        (ux, uy), (vx, vy) = verts[i], verts[(i + 1) % m]
        bx = ux + (vx - ux) * k
        by = uy + (vy - uy) * k
        best = min(best, float(_boundary_distance_many(bx, by, [a, b]).min()))
    return best


def _inside_many(xs, ys, verts):
    inside = np.zeros(xs.shape, dtype=bool)
    n = len(verts)
    for i in range(n):
        xi, yi = verts[i]
        xj, yj = verts[i - 1]
        if yi == yj:
            continue
        crosses = (yi > ys) != (yj > ys)
        x_at = (xj - xi) * (ys - yi) / (yj - yi) + xi
        inside ^= crosses & (xs < x_at)
    return inside


def _boundary_distance_many(xs, ys, verts):
    best = np.full(xs.shape, np.inf)
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        vx, vy = bx - ax, by - ay
        L = vx * vx + vy * vy
        if L == 0:
            s = 0.0
        else:
            s = np.clip(((xs - ax) * vx + (ys - ay) * vy) / L, 0.0, 1.0)
        best = np.minimum(best, np.hypot(ax + s * vx - xs, ay + s * vy - ys))
    return best


def dense_trapped(q1, q2, polygons, n: int = 10_000):
    """Dense-sampling collision oracle.

    Returns (hit, sample spacing, min distance from any sample to any obstacle boundary).
    """
    k = np.arange(n) / (n - 1)
    xs = q1[0] + (q2[0] - q1[0]) * k
    ys = q1[1] + (q2[1] - q1[1]) * k
    spacing = math.hypot(q2[0] - q1[0], q2[1] - q1[1]) / (n - 1)
    hit = False
    closest = math.inf
    for verts in polygons:
        if _inside_many(xs, ys, verts).any():
            hit = True
        closest = min(closest, float(_boundary_distance_many(xs, ys, verts).min()))
    return hit, spacing, closest


def front_first_rewire(path, world: WorldMap):
    """Repeatedly drop the earliest interior waypoint whose neighbours see each other."""
    route = list(path)
    while True:
        for i in range(1, len(route) - 1):
            if not is_trapped(route[i - 1], route[i + 1], world):
                del route[i]
                break
        else:
            return route


def random_star_polygon(rng: random.Random, cx, cy, r_min, r_max, n_min=3, n_max=10) -> list[tuple[float, float]]:
    """Star-shaped around (cx, cy), hence simple."""
    n = rng.randint(n_min, n_max)
    angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
    for k in range(1, n):
        if angles[k] - angles[k - 1] < 1e-3:
            angles[k] = angles[k - 1] + 1e-3
    return [(cx + rng.uniform(r_min, r_max) * math.cos(a), cy + rng.uniform(r_min, r_max) * math.sin(a)) for a in angles]


def random_rewire_instance(rng: random.Random, size: float = 200.0, max_waypoints: int = 20):
    """A random obstacle field and a collision-free polyline through it (2..max_waypoints points)."""
    while True:
        try:
            polys = []
            for _ in range(rng.randint(1, 8)):
                if rng.random() < 0.5:
                    x, y, s = rng.uniform(10, size - 50), rng.uniform(10, size - 50), rng.uniform(5, 35)
                    polys.append(Polygon(((x, y), (x + s, y), (x + s, y + s), (x, y + s))))
                else:
                    verts = random_star_polygon(rng, rng.uniform(30, size - 30), rng.uniform(30, size - 30), 4, 25)
                    polys.append(Polygon(tuple(verts)))
            start = Point2(rng.uniform(0, size), rng.uniform(0, size))
            world = WorldMap(size, size, start, start, tuple(polys))
        except ValueError:
            continue
        path = [start]
        target = rng.randint(2, max_waypoints)
        tries = 0
        while len(path) < target and tries < 2000:
            tries += 1
            q = Point2(rng.uniform(0, size), rng.uniform(0, size))
            if not is_trapped(path[-1], q, world):
                path.append(q)
        if len(path) < 2:
            continue
        return path, WorldMap(size, size, path[0], path[-1], tuple(polys))
