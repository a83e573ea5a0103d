"""RRT path planning with post-hoc triangular rewiring, plus a reproducible benchmark."""

from .geometry import Point2, Polygon, Segment, distance
from .rewire import RewireReport, path_length, post_triangular_rewire, rewire_step
from .rrt import PlannerConfig, PlanOutcome, Tree, plan
from .workspace import WorldMap, builtin_map, is_trapped, load_map, save_map

__version__ = "0.1.0"

__all__ = [
    "Point2",
    "Polygon",
    "Segment",
    "distance",
    "RewireReport",
    "path_length",
    "post_triangular_rewire",
    "rewire_step",
    "PlannerConfig",
    "PlanOutcome",
    "Tree",
    "plan",
    "WorldMap",
    "builtin_map",
    "is_trapped",
    "load_map",
    "save_map",
]
