"""Repeated seeded trials: raw RRT vs. RRT followed by triangular rewiring.

Each trial plans once and rewires that same path (paired design), so the
rewired variant's planning time is the raw planning time plus rewire time.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Iterable, Sequence

from .rewire import path_length, post_triangular_rewire
from .rrt import PlannerConfig, plan
from .workspace import WorldMap, builtin_map


class Variant(str, enum.Enum):
    RRT_RAW = "RRT_RAW"
    RRT_PLUS_REWIRE = "RRT_PLUS_REWIRE"


class TableFormat(str, enum.Enum):
    CSV = "csv"
    MARKDOWN = "markdown"


TIMING_FIELDS = ("planning_time_ms", "rewire_time_ms")


@dataclass(frozen=True)
class ExperimentConfig:
    map_ids: tuple[int, ...] = (1, 2, 3, 4)
    trials: int = 100
    planner: PlannerConfig = field(default_factory=PlannerConfig)
    variants: tuple[Variant, ...] = (Variant.RRT_RAW, Variant.RRT_PLUS_REWIRE)
    base_seed: int = 1
    output_format: TableFormat = TableFormat.MARKDOWN

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not self.variants:
            raise ValueError("at least one variant is required")
        if not self.map_ids:
            raise ValueError("at least one map is required")


@dataclass
class TrialResult:
    map_id: int
    trial_index: int
    seed: int
    variant: Variant
    success: bool
    path_length_px: float | None
    planning_time_ms: float
    rewire_time_ms: float
    iterations: int

    def record(self) -> dict:
        out = asdict(self)
        out["variant"] = self.variant.value
        return out

    def record_without_timing(self) -> dict:
        out = self.record()
        for key in TIMING_FIELDS:
            out.pop(key)
        return out


@dataclass
class SummaryRow:
    map_id: int
    variant: Variant
    mean_path_length_px: float
    mean_planning_time_ms: float
    mean_rewire_time_ms: float
    success_count: int
    trials: int
    path_length_ratio_pct: int
    planning_time_ratio_pct: int


@dataclass
class ExperimentSummary:
    rows: list[SummaryRow]

    def row(self, map_id: int, variant: Variant) -> SummaryRow:
        for r in self.rows:
            if r.map_id == map_id and r.variant == variant:
                return r
        raise KeyError((map_id, variant))


def ratio_pct(value: float, baseline: float) -> int:
    """Percentage of ``baseline`` as printed in the result tables.

    Percentages are truncated to whole numbers, and anything within one
    percentage point of 100 prints as 100.
    """
    if baseline == 0:
        return 100
    pct = 100.0 * value / baseline
    if abs(pct - 100.0) < 1.0:
        return 100
    return math.floor(pct + 1e-9)


def run_trial(world: WorldMap, cfg: PlannerConfig, seed: int, map_id: int = 0, trial_index: int = 0):
    """Plan once with ``seed`` and rewire the same path; returns (raw, rewired) results."""
    outcome = plan(world, replace(cfg, seed=seed))
    common = dict(map_id=map_id, trial_index=trial_index, seed=seed, iterations=outcome.iterations)
    if not outcome.success:
        raw = TrialResult(
            variant=Variant.RRT_RAW, success=False, path_length_px=None,
            planning_time_ms=outcome.planning_time_ms, rewire_time_ms=0.0, **common,
        )
        return raw, replace(raw, variant=Variant.RRT_PLUS_REWIRE)
    # plan() only ever emits collision-free edges, so the input guard is skipped
    _, report = post_triangular_rewire(outcome.path, world, validate=False)
    raw = TrialResult(
        variant=Variant.RRT_RAW,
        success=True,
        path_length_px=path_length(outcome.path),
        planning_time_ms=outcome.planning_time_ms,
        rewire_time_ms=0.0,
        **common,
    )
    paired = TrialResult(
        variant=Variant.RRT_PLUS_REWIRE,
        success=True,
        path_length_px=report.output_length,
        planning_time_ms=outcome.planning_time_ms + report.rewire_time_ms,
        rewire_time_ms=report.rewire_time_ms,
        **common,
    )
    return raw, paired


def _trial_job(args):
    map_id, cfg, seed, index = args
    return run_trial(builtin_map(map_id), cfg, seed, map_id, index)


def run_experiment(
    cfg: ExperimentConfig, maps: dict[int, WorldMap] | None = None, jobs: int = 1
) -> tuple[list[TrialResult], ExperimentSummary]:
    """Run every (map, trial) pair; trial i uses seed ``base_seed + i``.

    ``jobs > 1`` farms trials out to worker processes. That mode is for
    verification only: results match the sequential run except for timing.
    """
    maps = maps or {}
    worlds = {m: maps.get(m) or builtin_map(m) for m in cfg.map_ids}
    pairs = []
    if jobs > 1:
        if maps:
            raise ValueError("parallel mode only supports built-in maps")
        tasks = [(m, cfg.planner, cfg.base_seed + i, i) for m in cfg.map_ids for i in range(cfg.trials)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(_trial_job, tasks, chunksize=8))
    else:
        for m in cfg.map_ids:
            world = worlds[m]
            # warm-up run, discarded
            plan(world, replace(cfg.planner, seed=cfg.base_seed))
            for i in range(cfg.trials):
                pairs.append(run_trial(world, cfg.planner, cfg.base_seed + i, m, i))
    results = [r for pair in pairs for r in pair if r.variant in cfg.variants]
    return results, summarize(pairs, cfg)


def _mean(values: Sequence[float]) -> float:
    return statistics.fmean(values) if values else math.nan


def summarize(pairs: Iterable[tuple[TrialResult, TrialResult]], cfg: ExperimentConfig) -> ExperimentSummary:
    by_map: dict[int, list[tuple[TrialResult, TrialResult]]] = {}
    for raw, rewired in pairs:
        by_map.setdefault(raw.map_id, []).append((raw, rewired))
    rows = []
    for map_id in cfg.map_ids:
        trials = by_map.get(map_id, [])
        ok = [p for p in trials if p[0].success]
        base_len = _mean([p[0].path_length_px for p in ok])
        base_time = _mean([p[0].planning_time_ms for p in ok])
        for variant in cfg.variants:
            col = 0 if variant == Variant.RRT_RAW else 1
            length = _mean([p[col].path_length_px for p in ok])
            ptime = _mean([p[col].planning_time_ms for p in ok])
            rows.append(
                SummaryRow(
                    map_id=map_id,
                    variant=variant,
                    mean_path_length_px=length,
                    mean_planning_time_ms=ptime,
                    mean_rewire_time_ms=_mean([p[col].rewire_time_ms for p in ok]),
                    success_count=len(ok),
                    trials=len(trials),
                    path_length_ratio_pct=ratio_pct(length, base_len) if ok else 0,
                    planning_time_ratio_pct=ratio_pct(ptime, base_time) if ok else 0,
                )
            )
    return ExperimentSummary(rows)


CSV_COLUMNS = (
    "map",
    "variant",
    "mean_path_length_px",
    "path_length_ratio_pct",
    "mean_planning_time_ms",
    "planning_time_ratio_pct",
    "success_count",
)


def _cells(row: SummaryRow) -> list:
    return [
        row.map_id,
        row.variant.value,
        row.mean_path_length_px,
        row.path_length_ratio_pct,
        row.mean_planning_time_ms,
        row.planning_time_ratio_pct,
        row.success_count,
    ]


def emit_table(summary: ExperimentSummary, fmt: TableFormat | str = TableFormat.MARKDOWN) -> str:
    fmt = TableFormat(fmt)
    if fmt is TableFormat.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in summary.rows:
            writer.writerow(_cells(row))
        return buf.getvalue()

    lines = [
        "| Map | Variant | Path length (px) | Planning time (ms) | Successes |",
        "|---|---|---|---|---|",
    ]
    for row in summary.rows:
        lines.append(
            f"| {row.map_id} | {row.variant.value} "
            f"| {row.mean_path_length_px:.0f} ({row.path_length_ratio_pct}%) "
            f"| {row.mean_planning_time_ms:.1f} ({row.planning_time_ratio_pct}%) "
            f"| {row.success_count}/{row.trials} |"
        )
    return "\n".join(lines) + "\n"


def parse_csv_table(text: str) -> list[dict]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append(
            {
                "map": int(rec["map"]),
                "variant": Variant(rec["variant"]),
                "mean_path_length_px": float(rec["mean_path_length_px"]),
                "path_length_ratio_pct": int(rec["path_length_ratio_pct"]),
                "mean_planning_time_ms": float(rec["mean_planning_time_ms"]),
                "planning_time_ratio_pct": int(rec["planning_time_ratio_pct"]),
                "success_count": int(rec["success_count"]),
            }
        )
    return rows


def write_records(results: Iterable[TrialResult], fh) -> None:
    """One JSON object per line, fields exactly those of :class:`TrialResult`."""
    for r in results:
        fh.write(json.dumps(r.record(), sort_keys=True) + "\n")
