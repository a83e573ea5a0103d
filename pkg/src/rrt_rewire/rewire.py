"""Post Triangular Rewiring.

Walks a finished path with a focus index ``t``. Whenever the chord from
waypoint ``t`` to waypoint ``t + 2`` is collision-free, the middle waypoint is
dropped: by the triangle inequality the two old edges are never shorter than
the chord. Full passes repeat until one pass changes nothing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .geometry import Point2, distance
from .workspace import WorldMap, is_trapped


class InvalidPathError(ValueError):
    pass


@dataclass(frozen=True)
class RewireReport:
    input_length: float
    output_length: float
    waypoints_removed: int
    passes: int
    rewire_time_ms: float


def path_length(path: Sequence[Sequence[float]]) -> float:
    return sum(distance(path[i], path[i + 1]) for i in range(len(path) - 1))


def rewire_step(path: Sequence[Point2], t: int) -> list[Point2]:
    """Replace edges (t, t+1) and (t+1, t+2) with the single edge (t, t+2)."""
    if not 0 <= t <= len(path) - 3:
        raise IndexError(f"focus index {t} out of range for a path of {len(path)} waypoints")
    return [*path[: t + 1], *path[t + 2 :]]


def check_path(path: Sequence[Point2], world: WorldMap) -> None:
    if len(path) < 2:
        raise InvalidPathError(f"a path needs at least 2 waypoints, got {len(path)}")
    for i in range(len(path) - 1):
        if is_trapped(path[i], path[i + 1], world):
            raise InvalidPathError(f"edge {i} {tuple(path[i])} -> {tuple(path[i + 1])} collides with an obstacle")


def post_triangular_rewire(
    path: Sequence[Point2],
    world: WorldMap,
    validate: bool = True,
    step_back: bool = True,
) -> tuple[list[Point2], RewireReport]:
    """Shorten ``path`` to a fixpoint of triangular rewiring.

    After a waypoint is removed the focus moves back one position (when
    ``step_back`` is set), so the walk always removes the earliest removable
    waypoint first. With ``step_back=False`` the focus stays put and earlier
    triples are only revisited by the next full pass; both modes end at a
    fixpoint, though not always the same one.

    Raises :class:`InvalidPathError` if ``validate`` is set and an input edge
    is not collision-free.
    """
    if validate:
        check_path(path, world)
    t0 = time.perf_counter()
    route = [Point2(p[0], p[1]) for p in path]
    passes = 0
    modified = True
    while modified:
        modified = False
        passes += 1
        t = 0
        while t + 1 < len(route) - 1:
            if not is_trapped(route[t], route[t + 2], world):
                del route[t + 1]
                modified = True
                if step_back and t > 0:
                    # the triple ending at the new neighbour of t changed too
                    t -= 1
            else:
                t += 1
    elapsed = (time.perf_counter() - t0) * 1000.0
    report = RewireReport(
        input_length=path_length(path),
        output_length=path_length(route),
        waypoints_removed=len(path) - len(route),
        passes=passes,
        rewire_time_ms=elapsed,
    )
    return route, report
