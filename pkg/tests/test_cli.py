"""End-to-end runs of the command-line tasks on small spaces."""

import csv
import hashlib
import json
import subprocess
import sys

import pytest

from ringcap import cli


def write_cfg(tmp_path, obj, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def read_manifest(out):
    return json.loads((out / "manifest.json").read_text())


def grid_cfg(task, n=2, half=0.55, h=0.05, **extra):
    return {"space": {"kind": "euclidean_grid", "n": n,
                      "half_extent": half, "h": h},
            "task": dict(task, **extra)}


def dim_cfg():
    # the pointwise analysis insists on a decade of radii above 50 grid
    # steps, so this needs the finer spacing
    return grid_cfg({"r_max": 0.52, "n_samples": 5, "n_radii": 6}, h=0.01)


def test_dimension_writes_artifacts_and_manifest(tmp_path):
    cfg = write_cfg(tmp_path, dim_cfg())
    out = tmp_path / "out"
    rc = cli.main(["dimension", "--config", cfg, "--out", str(out), "--quiet"])
    assert rc == 0
    man = read_manifest(out)
    assert man["task"] == "dimension" and man["seed"] == 0
    for name, digest in man["artifacts"].items():
        blob = (out / name).read_bytes()
        assert hashlib.sha256(blob).hexdigest() == digest
    report = json.loads((out / "dimension.json").read_text())
    assert report["q_local"] == pytest.approx(2.0, abs=0.3)


def test_repeat_runs_are_byte_identical(tmp_path):
    cfg = write_cfg(tmp_path, dim_cfg())
    outs = []
    for sub in ("a", "b"):
        out = tmp_path / sub
        assert cli.main(["dimension", "--config", cfg,
                         "--out", str(out), "--quiet"]) == 0
        outs.append(out)
    man_a, man_b = (read_manifest(o) for o in outs)
    assert man_a["artifacts"] == man_b["artifacts"]
    for name in man_a["artifacts"]:
        assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()
    man_a.pop("wall_time_s"), man_b.pop("wall_time_s")
    assert man_a == man_b


def test_seed_flag_changes_the_sample(tmp_path):
    cfg = write_cfg(tmp_path, dim_cfg())
    blobs = {}
    for seed in ("1", "2"):
        out = tmp_path / seed
        assert cli.main(["dimension", "--config", cfg, "--out", str(out),
                         "--seed", seed, "--quiet"]) == 0
        assert read_manifest(out)["seed"] == int(seed)
        blobs[seed] = (out / "dimension_samples.csv").read_bytes()
    assert blobs["1"] != blobs["2"]


@pytest.mark.parametrize("where,key", [("task", "bogus"), ("space", "bogus"),
                                       ("", "bogus")])
def test_unknown_keys_are_rejected(tmp_path, capsys, where, key):
    cfg_obj = dim_cfg()
    (cfg_obj[where] if where else cfg_obj)[key] = 1
    out = tmp_path / "out"
    rc = cli.main(["dimension", "--config", write_cfg(tmp_path, cfg_obj),
                   "--out", str(out)])
    assert rc == 2
    assert "config error" in capsys.readouterr().err
    assert not (out / "manifest.json").exists()


def test_bad_value_types_are_rejected(tmp_path):
    cfg = write_cfg(tmp_path, grid_cfg({"r_max": "big"}))
    assert cli.main(["dimension", "--config", cfg,
                     "--out", str(tmp_path / "o")]) == 2


def test_missing_and_malformed_configs(tmp_path):
    assert cli.main(["dimension", "--config", str(tmp_path / "nope.json"),
                     "--out", str(tmp_path)]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["dimension", "--config", str(bad),
                     "--out", str(tmp_path)]) == 2
    with pytest.raises(SystemExit):
        cli.main(["dimension"])  # --config is required


def test_bounds_table_and_validity_note(tmp_path):
    base = {"center": [0.0, 0.0], "r_list": [0.05, 0.1], "R": 0.5,
            "p_list": [2.0, 3.0], "q_center": 2.0}
    out = tmp_path / "far"
    assert cli.main(["bounds", "--config",
                     write_cfg(tmp_path, grid_cfg(base), "far.json"),
                     "--out", str(out), "--quiet"]) == 0
    # R = 0.5 is past a quarter of the sampled diameter, so the manifest
    # carries a trust warning; widening R0 removes it
    assert "validity_note" in read_manifest(out)
    out2 = tmp_path / "near"
    assert cli.main(["bounds", "--config",
                     write_cfg(tmp_path, grid_cfg(base, R0=10.0), "near.json"),
                     "--out", str(out2), "--quiet"]) == 0
    assert "validity_note" not in read_manifest(out2)
    with open(out / "bounds.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    for row in rows:
        assert row["regime"] in ("below", "critical", "above")
        assert float(row["lower"]) <= float(row["upper"]) * (1 + 1e-12)


def test_solve_matches_the_line_value(tmp_path):
    cfg = write_cfg(tmp_path, {
        "space": {"kind": "euclidean_grid", "n": 1, "half_extent": 1.2,
                  "h": 0.05},
        "task": {"center": [0.0], "r": 0.2, "R": 1.0, "p": 2.0,
                 "field_dump": True}})
    out = tmp_path / "out"
    assert cli.main(["solve", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    payload = json.loads((out / "solve.json").read_text())
    # two unit chains of length R - r in series with the grounded tail
    assert payload["value"] == pytest.approx(2.0 / 0.8, rel=1e-6)
    assert payload["converged"]
    with open(out / "field.csv") as fh:
        us = [float(row["u"]) for row in csv.DictReader(fh)]
    assert max(us) <= 1 + 1e-9 and min(us) >= -1e-9


def test_nonconvergence_exits_3_but_keeps_artifacts(tmp_path):
    cfg = write_cfg(tmp_path, grid_cfg(
        {"center": [0.0, 0.0], "r": 0.15, "R": 0.45, "p": 3.5,
         "max_iter": 1}))
    out = tmp_path / "out"
    assert cli.main(["solve", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 3
    payload = json.loads((out / "solve.json").read_text())
    assert not payload["converged"]
    assert "solve.json" in read_manifest(out)["artifacts"]


def test_sandwich_reports_an_admissible_bracket(tmp_path):
    cfg = write_cfg(tmp_path, grid_cfg(
        {"center": [0.0, 0.0], "r": 0.1, "R": 0.4, "p": 2.0,
         "q_center": 2.0}))
    out = tmp_path / "out"
    assert cli.main(["sandwich", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    rep = json.loads((out / "sandwich.json").read_text())
    assert rep["regime"] == "critical"
    assert rep["admissible_ok"]
    assert rep["capacity"] <= rep["profile_energy"] * (1 + 1e-9)


def test_profile_energy_shell_table(tmp_path):
    cfg = write_cfg(tmp_path, grid_cfg(
        {"kind": "log", "center": [0.0, 0.0], "r": 0.1, "R": 0.4, "p": 2.0}))
    out = tmp_path / "out"
    assert cli.main(["profile-energy", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    with open(out / "profile_shells.csv") as fh:
        shells = list(csv.DictReader(fh))
    assert len(shells) == 3  # doublings of r up to R = 4r
    assert all(float(s["energy"]) >= 0 for s in shells)
    with open(out / "profile_energy.csv") as fh:
        row, = csv.DictReader(fh)
    assert row["kind"] == "log" and float(row["energy_edge"]) > 0


def test_green_levels_and_refinement_trend(tmp_path):
    cfg = write_cfg(tmp_path, {
        "space": {"kind": "euclidean_grid", "n": 1, "half_extent": 1.2,
                  "h": 0.04},
        "task": {"center": [0.0], "R": 1.0, "p": 2.0,
                 "refine_h": [0.04, 0.02, 0.01], "q_center": 1.0}})
    out = tmp_path / "out"
    assert cli.main(["green", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    man = read_manifest(out)
    assert man["level_notices"] == []
    with open(out / "green_levels.csv") as fh:
        levels = list(csv.DictReader(fh))
    assert len(levels) == 5
    assert float(levels[0]["ratio"]) == pytest.approx(1.0, abs=1e-9)
    trend = json.loads((out / "green_trend.json").read_text())
    assert trend["regime"] == "above"
    assert trend["bounded_change"] < 0.1
    for h, g in zip(trend["resolutions"], trend["max_values"]):
        assert g == pytest.approx((1.0 - 3.0 * h) / 2.0, abs=1e-9)


def test_green_refinement_requires_an_exponent(tmp_path):
    cfg = write_cfg(tmp_path, {
        "space": {"kind": "euclidean_grid", "n": 1, "half_extent": 1.2,
                  "h": 0.04},
        "task": {"center": [0.0], "R": 1.0, "p": 2.0,
                 "refine_h": [0.04, 0.02, 0.01]}})
    assert cli.main(["green", "--config", cfg,
                     "--out", str(tmp_path / "o")]) == 2


def test_singleton_limit_on_the_line(tmp_path):
    # dyadic spacing keeps every requested radius exactly on a node, so the
    # chain gaps (and hence the capacities) come out in closed form
    cfg = write_cfg(tmp_path, {
        "space": {"kind": "euclidean_grid", "n": 1, "half_extent": 1.25,
                  "h": 0.0625},
        "task": {"center": [0.0], "R": 1.0, "r_list": [0.5, 0.4375, 0.375],
                 "p": 2.0}})
    out = tmp_path / "out"
    assert cli.main(["singleton-limit", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    payload = json.loads((out / "singleton.json").read_text())
    assert payload["decreasing"]
    assert payload["limit_estimate"] == pytest.approx(2.0 / 0.625, rel=1e-6)
    with open(out / "singleton.csv") as fh:
        assert len(list(csv.DictReader(fh))) == 3


def test_regime_sweep_pairs_solves_with_estimates(tmp_path):
    cfg = write_cfg(tmp_path, grid_cfg(
        {"center": [0.0, 0.0], "r_list": [0.1], "R": 0.4,
         "p_list": [2.0], "q_center": 2.0, "R0": 10.0}))
    out = tmp_path / "out"
    assert cli.main(["regime-sweep", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    with open(out / "sweep.csv") as fh:
        row, = csv.DictReader(fh)
    assert row["regime"] == "critical" and row["converged"] == "1"
    assert float(row["capacity"]) > 0


def test_fit_recovers_an_exact_power_law(tmp_path):
    data = tmp_path / "data.csv"
    xs = [0.1, 0.2, 0.4, 0.8, 1.6]
    rows = "\n".join(f"{x},{3.0 * x ** 2.5}" for x in xs)
    data.write_text("r,value\n" + rows + "\n")
    cfg = write_cfg(tmp_path, {"task": {"csv": str(data), "x_column": "r",
                                        "y_column": "value"}})
    out = tmp_path / "out"
    assert cli.main(["fit", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    fit = json.loads((out / "fit.json").read_text())
    assert fit["slope"] == pytest.approx(2.5, abs=1e-9)
    assert fit["n_points"] == 5
    # under four points there is nothing trustworthy to report
    short = tmp_path / "short.csv"
    short.write_text("r,value\n1,1\n2,4\n3,9\n")
    cfg2 = write_cfg(tmp_path, {"task": {"csv": str(short), "x_column": "r",
                                         "y_column": "value"}}, "c2.json")
    assert cli.main(["fit", "--config", cfg2, "--out", str(out)]) == 2
    cfg3 = write_cfg(tmp_path, {"task": {"csv": str(data), "x_column": "nope",
                                         "y_column": "value"}}, "c3.json")
    assert cli.main(["fit", "--config", cfg3, "--out", str(out)]) == 2


@pytest.mark.parametrize("space", [
    {"kind": "glued_balls", "n": 2, "h": 0.1, "segment_length": 1.0},
    {"kind": "double_cone", "n": 2, "half_extent": 1.3, "h": 0.1},
    {"kind": "heisenberg_grid", "half_extent": 0.3, "h": 0.1,
     "with_edges": False},
])
def test_every_space_kind_builds_from_config(tmp_path, space):
    dim = 3 if space["kind"] == "heisenberg_grid" else 2
    cfg = write_cfg(tmp_path, {
        "space": space,
        "task": {"center": [0.0] * dim, "r_list": [0.15], "R": 0.5,
                 "q_center": 2.0, "p_list": [2.0], "R0": 10.0}})
    out = tmp_path / "out"
    assert cli.main(["bounds", "--config", cfg, "--out", str(out),
                     "--quiet"]) == 0
    assert (out / "bounds.csv").exists()


def test_console_script_is_wired(tmp_path):
    data = tmp_path / "d.csv"
    data.write_text("x,y\n1,1\n2,8\n4,64\n8,512\n")
    cfg = write_cfg(tmp_path, {"task": {"csv": str(data), "x_column": "x",
                                        "y_column": "y"}})
    proc = subprocess.run(
        [sys.executable, "-m", "ringcap", "fit", "--config", cfg,
         "--out", str(tmp_path / "out")],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    fit = json.loads((tmp_path / "out" / "fit.json").read_text())
    assert fit["slope"] == pytest.approx(3.0, abs=1e-9)
