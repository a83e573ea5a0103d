import json
import re
import xml.etree.ElementTree as ET

import pytest

from rrt_rewire.cli import main


def lengths(text):
    return [float(x) for x in re.findall(r"length ([0-9.]+) px", text)]


def test_plan_writes_svg(tmp_path, capsys):
    assert main(["plan", "--map", "builtin:2", "--seed", "1", "--out", str(tmp_path)]) == 0
    raw, rewired = lengths(capsys.readouterr().out)
    assert rewired <= raw
    assert len(list(tmp_path.glob("*.svg"))) == 1


def test_plan_without_rewire(tmp_path, capsys):
    assert main(["plan", "--map", "builtin:2", "--seed", "1", "--no-rewire", "--out", str(tmp_path)]) == 0
    assert len(lengths(capsys.readouterr().out)) == 1


def test_plan_missing_map(tmp_path, capsys):
    code = main(["plan", "--map", str(tmp_path / "missing.map"), "--out", str(tmp_path)])
    assert code != 0
    assert "missing.map" in capsys.readouterr().err


def test_plan_bad_map_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"width": 600}')
    assert main(["plan", "--map", str(bad), "--out", str(tmp_path)]) != 0
    assert "bad.json" in capsys.readouterr().err


def test_plan_failure_exit_status(tmp_path):
    doc = {"width": 600, "height": 600, "start": [50, 300], "goal": [550, 300],
           "obstacles": [[[290, 0], [310, 0], [310, 600], [290, 600]]]}
    f = tmp_path / "walled.json"
    f.write_text(json.dumps(doc))
    assert main(["plan", "--map", str(f), "--max-iterations", "500", "--out", str(tmp_path)]) == 1


def test_plan_epsilon_override(tmp_path, capsys):
    assert main(["plan", "--map", "builtin:2", "--epsilon", "3", "--out", str(tmp_path)]) == 0


def test_bench_single_trial(tmp_path, capsys):
    assert main(["bench", "--trials", "1", "--maps", "2", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert out.count("| 2 |") == 2
    assert (tmp_path / "summary.csv").exists() and (tmp_path / "summary.md").exists()
    records = [json.loads(line) for line in (tmp_path / "trials.jsonl").read_text().splitlines()]
    assert len(records) == 2


def test_bench_rerun_is_deterministic(tmp_path):
    def run(d):
        assert main(["bench", "--trials", "3", "--maps", "2,3", "--seed", "1000", "--out", str(d)]) == 0
        recs = [json.loads(line) for line in (d / "trials.jsonl").read_text().splitlines()]
        for r in recs:
            r.pop("planning_time_ms")
            r.pop("rewire_time_ms")
        return recs

    assert run(tmp_path / "a") == run(tmp_path / "b")


def test_bench_csv_stdout(tmp_path, capsys):
    assert main(["bench", "--trials", "1", "--maps", "3", "--format", "csv", "--no-rewire", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("map,variant,")
    assert "RRT_PLUS_REWIRE" not in out


def test_bench_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["bench", "--trials", "1", "--maps", "2", "--out", str(blocker / "sub")]) != 0


def test_render_maps_default(tmp_path):
    assert main(["render-maps", "--out", str(tmp_path)]) == 0
    assert sorted(p.name for p in tmp_path.glob("*.svg")) == ["map1.svg", "map2.svg", "map3.svg", "map4.svg"]


def test_render_map3(tmp_path):
    assert main(["render-maps", "--maps", "3", "--out", str(tmp_path)]) == 0
    files = list(tmp_path.glob("*.svg"))
    assert len(files) == 1
    root = ET.parse(files[0]).getroot()
    assert len(root.findall(".//{http://www.w3.org/2000/svg}polygon")) == 50


def test_render_maps_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["render-maps", "--out", str(blocker / "sub")]) != 0


@pytest.mark.parametrize("argv", [["bench", "--trials", "0"], ["bench", "--maps", "7"], ["plan", "--step-length", "-1"]])
def test_flag_validation(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0
