"""Command-line entry point: ``rrt-rewire {plan,bench,render-maps}``."""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import bench
from .render import render_scene, write_svg
from .rewire import path_length, post_triangular_rewire
from .rrt import PlannerConfig, plan
from .workspace import BUILTIN_MAP_IDS, MapError, WorldMap, builtin_map, resolve_map


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _non_negative_float(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _map_ids(text: str) -> tuple[int, ...]:
    try:
        ids = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of map ids, got {text!r}") from None
    bad = [i for i in ids if i not in BUILTIN_MAP_IDS]
    if not ids or bad:
        raise argparse.ArgumentTypeError(f"map ids must be drawn from {BUILTIN_MAP_IDS}, got {text!r}")
    return ids


def _add_planner_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--step-length", type=_positive_float, default=30.0, help="RRT step length in px (default 30)")
    p.add_argument("--max-iterations", type=_positive_int, default=200_000, help="give up after this many samples")
    p.add_argument("--epsilon", type=_non_negative_float, default=None,
                   help="minimum clearance in px; overrides the map's own value")
    p.add_argument("--no-rewire", action="store_true", help="skip the rewiring post-processor")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rrt-rewire", description="RRT planning with triangular path rewiring.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="plan once and write an SVG of the result")
    p.add_argument("--map", default="builtin:1", help="builtin:N or a path to a map JSON file")
    p.add_argument("--seed", type=_seed, default=1, help="PRNG seed")
    p.add_argument("--out", type=Path, default=Path("out"), help="output directory")
    p.add_argument("--no-tree", action="store_true", help="leave the RRT tree out of the SVG")
    _add_planner_flags(p)

    b = sub.add_parser("bench", help="repeated seeded trials over the built-in maps")
    b.add_argument("--maps", type=_map_ids, default=BUILTIN_MAP_IDS, help="comma-separated built-in map ids (default 1,2,3,4)")
    b.add_argument("--trials", type=_positive_int, default=100, help="trials per map")
    b.add_argument("--seed", type=_seed, default=1, help="base seed; trial i uses seed + i")
    b.add_argument("--out", type=Path, default=Path("bench_out"), help="directory for trials.jsonl and the summary tables")
    b.add_argument("--format", choices=[f.value for f in bench.TableFormat], default="markdown",
                   help="table format printed to stdout (files always get both)")
    b.add_argument("--jobs", type=_positive_int, default=1,
                   help="worker processes; values above 1 are for verification, timings are not comparable")
    _add_planner_flags(b)

    r = sub.add_parser("render-maps", help="write one SVG per built-in map")
    r.add_argument("--maps", type=_map_ids, default=BUILTIN_MAP_IDS, help="comma-separated built-in map ids")
    r.add_argument("--out", type=Path, default=Path("maps_svg"), help="output directory")
    return parser


def _with_epsilon(world: WorldMap, epsilon: float | None) -> WorldMap:
    if epsilon is None:
        return world
    return dataclasses.replace(world, epsilon=epsilon)


def _planner(args, seed: int = 0) -> PlannerConfig:
    return PlannerConfig(step_length=args.step_length, max_iterations=args.max_iterations, seed=seed)


def _prepare_dir(path: Path) -> None:
    path.mkdir(parents=True, exist_ok=True)


def cmd_plan(args) -> int:
    try:
        world = _with_epsilon(resolve_map(args.map), args.epsilon)
    except MapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    outcome = plan(world, _planner(args, args.seed))
    if not outcome.success:
        print(f"planning failed after {outcome.iterations} iterations ({outcome.planning_time_ms:.1f} ms)",
              file=sys.stderr)
        return 1
    print(f"raw:     length {path_length(outcome.path):.2f} px, time {outcome.planning_time_ms:.2f} ms, "
          f"{len(outcome.path)} waypoints, {outcome.iterations} iterations")
    paths = [(outcome.path, "RRT")]
    if not args.no_rewire:
        rewired, report = post_triangular_rewire(outcome.path, world)
        print(f"rewired: length {report.output_length:.2f} px, "
              f"time {outcome.planning_time_ms + report.rewire_time_ms:.2f} ms "
              f"(rewire {report.rewire_time_ms:.3f} ms), {len(rewired)} waypoints, {report.passes} passes")
        paths.append((rewired, "RRT + rewiring"))

    svg = render_scene(world, None if args.no_tree else outcome.tree, paths)
    stem = Path(args.map).stem if not args.map.startswith("builtin:") else f"map{args.map.split(':', 1)[1]}"
    target = args.out / f"plan_{stem}_seed{args.seed}.svg"
    try:
        _prepare_dir(args.out)
        write_svg(target, svg)
    except OSError as exc:
        print(f"error: cannot write {target}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {target}")
    return 0


def cmd_bench(args) -> int:
    variants = (bench.Variant.RRT_RAW,) if args.no_rewire else tuple(bench.Variant)
    cfg = bench.ExperimentConfig(
        map_ids=args.maps,
        trials=args.trials,
        planner=_planner(args),
        variants=variants,
        base_seed=args.seed,
        output_format=bench.TableFormat(args.format),
    )
    try:
        _prepare_dir(args.out)
    except OSError as exc:
        print(f"error: cannot create output directory {args.out}: {exc}", file=sys.stderr)
        return 3
    maps = None
    if args.epsilon is not None:
        maps = {m: _with_epsilon(builtin_map(m), args.epsilon) for m in args.maps}
    if maps and args.jobs > 1:
        print("error: --epsilon cannot be combined with --jobs", file=sys.stderr)
        return 2
    results, summary = bench.run_experiment(cfg, maps=maps, jobs=args.jobs)
    try:
        with open(args.out / "trials.jsonl", "w") as fh:
            bench.write_records(results, fh)
        (args.out / "summary.csv").write_text(bench.emit_table(summary, bench.TableFormat.CSV))
        (args.out / "summary.md").write_text(bench.emit_table(summary, bench.TableFormat.MARKDOWN))
    except OSError as exc:
        print(f"error: cannot write results to {args.out}: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(bench.emit_table(summary, cfg.output_format))
    for row in summary.rows:
        if row.success_count < row.trials and row.variant == bench.Variant.RRT_RAW:
            print(f"map {row.map_id}: {row.trials - row.success_count} of {row.trials} trials failed", file=sys.stderr)
    return 0


def cmd_render_maps(args) -> int:
    try:
        _prepare_dir(args.out)
        for m in args.maps:
            target = args.out / f"map{m}.svg"
            write_svg(target, render_scene(builtin_map(m)))
            print(f"wrote {target}")
    except OSError as exc:
        print(f"error: cannot write to {args.out}: {exc}", file=sys.stderr)
        return 3
    return 0


COMMANDS = {"plan": cmd_plan, "bench": cmd_bench, "render-maps": cmd_render_maps}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
