"""Rerun the 4-map x 100-trial benchmark and store the timing-free summary as the golden record."""

import json
from pathlib import Path

from rrt_rewire.bench import ExperimentConfig, Variant, run_experiment

REFERENCE_RATIO_PCT = {1: 72, 2: 82, 3: 89, 4: 85}
OUT = Path(__file__).resolve().parents[1] / "tests" / "golden" / "benchmark_summary.json"


def main():
    cfg = ExperimentConfig(map_ids=(1, 2, 3, 4), trials=100, base_seed=1)
    _, summary = run_experiment(cfg)
    maps = {}
    for m in cfg.map_ids:
        raw = summary.row(m, Variant.RRT_RAW)
        rew = summary.row(m, Variant.RRT_PLUS_REWIRE)
        maps[str(m)] = {
            "raw_mean_px": raw.mean_path_length_px,
            "rewired_mean_px": rew.mean_path_length_px,
            "ratio": rew.mean_path_length_px / raw.mean_path_length_px,
            "ratio_pct": rew.path_length_ratio_pct,
            "reference_ratio_pct": REFERENCE_RATIO_PCT[m],
            "successes": raw.success_count,
        }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"trials": cfg.trials, "base_seed": cfg.base_seed, "maps": maps}, indent=2) + "\n")
    print(OUT.read_text())


if __name__ == "__main__":
    main()
