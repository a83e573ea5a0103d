"""Baseline RRT: sample, find the nearest node, step toward the sample, insert.

Randomness comes from :class:`random.Random` (MT19937). Its ``random()``
stream for an integer seed is guaranteed stable across Python versions,
which is what makes seeded trials reproducible.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .geometry import Point2, distance
from .workspace import WorldMap, is_trapped

ROOT = -1


@dataclass(frozen=True)
class PlannerConfig:
    step_length: float = 30.0
    max_iterations: int = 200_000
    goal_connect_radius: float | None = None  # None means step_length
    seed: int = 0
    goal_bias: float = 0.0

    def __post_init__(self):
        if not self.step_length > 0:
            raise ValueError(f"step_length must be positive, got {self.step_length}")
        if self.max_iterations <= 0:
            raise ValueError(f"max_iterations must be positive, got {self.max_iterations}")
        if self.goal_connect_radius is not None and not self.goal_connect_radius > 0:
            raise ValueError(f"goal_connect_radius must be positive, got {self.goal_connect_radius}")
        if not 0.0 <= self.goal_bias < 1.0:
            raise ValueError(f"goal_bias must lie in [0, 1), got {self.goal_bias}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def connect_radius(self) -> float:
        return self.step_length if self.goal_connect_radius is None else self.goal_connect_radius


@dataclass
class Tree:
    """Rooted tree stored as parallel lists; ``parents[i] < i`` for every non-root node."""

    positions: list[Point2] = field(default_factory=list)
    parents: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.positions)

    def add(self, p: Point2, parent: int) -> int:
        self.positions.append(p)
        self.parents.append(parent)
        return len(self.positions) - 1

    def branch(self, index: int) -> list[Point2]:
        """Waypoints from the root down to ``index``."""
        out = []
        while index != ROOT:
            out.append(self.positions[index])
            index = self.parents[index]
        out.reverse()
        return out

    def edges(self):
        for i, parent in enumerate(self.parents):
            if parent != ROOT:
                yield self.positions[parent], self.positions[i]


@dataclass
class PlanOutcome:
    path: list[Point2] | None
    tree: Tree
    iterations: int
    planning_time_ms: float

    @property
    def success(self) -> bool:
        return self.path is not None


def sample_uniform(rng: random.Random, world: WorldMap) -> Point2:
    return Point2(rng.random() * world.width, rng.random() * world.height)


def nearest(tree: Tree, q_rand) -> int:
    """Index of the node closest to q_rand; ties go to the lowest index."""
    best, best_d = 0, math.inf
    for i, p in enumerate(tree.positions):
        dx = p[0] - q_rand[0]
        dy = p[1] - q_rand[1]
        d = dx * dx + dy * dy
        if d < best_d:
            best, best_d = i, d
    return best


def steer(q_near, q_rand, step_length: float) -> Point2:
    d = distance(q_near, q_rand)
    if d <= step_length:
        return Point2(q_rand[0], q_rand[1])
    s = step_length / d
    return Point2(q_near[0] + s * (q_rand[0] - q_near[0]), q_near[1] + s * (q_rand[1] - q_near[1]))


class _NodeArrays:
    """Growable coordinate buffers for the vectorised nearest-node scan."""

    def __init__(self, capacity: int = 1024):
        self.xs = np.empty(capacity)
        self.ys = np.empty(capacity)
        self.n = 0

    def append(self, p) -> None:
        if self.n == len(self.xs):
            self.xs = np.concatenate([self.xs, np.empty(len(self.xs))])
            self.ys = np.concatenate([self.ys, np.empty(len(self.ys))])
        self.xs[self.n] = p[0]
        self.ys[self.n] = p[1]
        self.n += 1

    def nearest(self, q) -> int:
        dx = self.xs[: self.n] - q[0]
        dy = self.ys[: self.n] - q[1]
        # argmin returns the first minimum, i.e. the lowest index on ties
        return int(np.argmin(dx * dx + dy * dy))


def plan(world: WorldMap, cfg: PlannerConfig) -> PlanOutcome:
    """Grow an RRT from ``world.start`` until the goal is connected or the budget runs out."""
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    goal = world.goal
    radius = cfg.connect_radius
    step = cfg.step_length
    tree = Tree()
    tree.add(world.start, ROOT)
    nodes = _NodeArrays()
    nodes.append(world.start)

    path = None
    iterations = 0
    while iterations < cfg.max_iterations:
        iterations += 1
        if cfg.goal_bias and rng.random() < cfg.goal_bias:
            q_rand = goal
        else:
            q_rand = sample_uniform(rng, world)
        near = nodes.nearest(q_rand)
        q_near = tree.positions[near]
        q_new = steer(q_near, q_rand, step)
        if is_trapped(q_near, q_new, world):
            continue
        new = tree.add(q_new, near)
        nodes.append(q_new)
        if distance(q_new, goal) <= radius and not is_trapped(q_new, goal, world):
            path = tree.branch(tree.add(goal, new))
            break

    elapsed = (time.perf_counter() - t0) * 1000.0
    return PlanOutcome(path=path, tree=tree, iterations=iterations, planning_time_ms=elapsed)
