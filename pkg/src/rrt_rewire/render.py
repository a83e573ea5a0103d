"""Static SVG snapshots of a map, an RRT tree and planned paths."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Sequence
from xml.sax.saxutils import escape

from .rrt import Tree
from .workspace import WorldMap


@dataclass(frozen=True)
class RenderStyle:
    start_color: str = "#2ca02c"
    goal_color: str = "#8e44ad"
    obstacle_fill: str = "#000000"
    obstacle_stroke: str = "#f1c40f"
    raw_path_color: str = "#d62728"
    rewired_path_color: str = "#1f77b4"
    tree_edge_color: str = "#b0b0b0"
    tree_stroke: float = 0.6
    path_stroke: float = 2.0
    obstacle_stroke_width: float = 1.5
    endpoint_radius: float = 8.0

    def __post_init__(self):
        for name in ("tree_stroke", "path_stroke", "obstacle_stroke_width", "endpoint_radius"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


def _num(v: float) -> str:
    # fixed precision keeps output byte-stable
    text = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _points(pts) -> str:
    return " ".join(f"{_num(p[0])},{_num(p[1])}" for p in pts)


def render_scene(
    world: WorldMap,
    tree: Tree | None = None,
    paths: Sequence[tuple[Sequence, str]] = (),
    style: RenderStyle = RenderStyle(),
    path_colors: Sequence[str] | None = None,
) -> str:
    """Return a standalone SVG 1.1 document.

    Path colours default to the raw colour for the first path and the
    rewired colour for the rest.
    """
    w, h = _num(world.width), _num(world.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"<title>{escape(world.name)}</title>",
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff" stroke="#000000" stroke-width="1"/>',
        '<g id="obstacles">',
    ]
    for poly in world.obstacles:
        out.append(
            f'<polygon points="{_points(poly.vertices)}" fill="{style.obstacle_fill}" '
            f'stroke="{style.obstacle_stroke}" stroke-width="{_num(style.obstacle_stroke_width)}"/>'
        )
    out.append("</g>")

    if tree is not None:
        out.append(f'<g id="tree" stroke="{style.tree_edge_color}" stroke-width="{_num(style.tree_stroke)}">')
        for a, b in tree.edges():
            out.append(f'<line x1="{_num(a[0])}" y1="{_num(a[1])}" x2="{_num(b[0])}" y2="{_num(b[1])}"/>')
        out.append("</g>")

    out.append('<g id="paths" fill="none">')
    for k, (pts, label) in enumerate(paths):
        if path_colors is not None:
            color = path_colors[k]
        else:
            color = style.raw_path_color if k == 0 else style.rewired_path_color
        out.append(
            f'<polyline class="path" points="{_points(pts)}" '
            f'stroke="{color}" stroke-width="{_num(style.path_stroke)}"><title>{escape(label)}</title></polyline>'
        )
    out.append("</g>")

    r = _num(style.endpoint_radius)
    for label, p, color in (("S", world.start, style.start_color), ("G", world.goal, style.goal_color)):
        x, y = _num(p[0]), _num(p[1])
        out.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="{color}"/>')
        out.append(
            f'<text x="{x}" y="{y}" font-family="sans-serif" font-size="10" fill="#ffffff" '
            f'text-anchor="middle" dominant-baseline="central">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, svg: str) -> None:
    FsPath(path).write_text(svg)
