import json

import pytest

from entbound import bounds
from entbound.cli import main


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def chain4(tmp_path):
    return write_json(tmp_path / "g.json", {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})


def test_bounds_happy_path(tmp_path, chain4, capsys):
    meas = write_json(tmp_path / "m.json", {"a": [0.9, 0.9, 0.9, 0.9]})
    assert main(["bounds", "--graph", chain4, "--measurements", meas]) == 0
    out = capsys.readouterr().out
    assert "fidelity_floor" in out and "0.800000" in out
    assert "rob_lower" in out and "2.200000" in out
    assert "2.600000" in out and "0.854412" in out and "1.427206" in out


def test_bounds_json_output(tmp_path, chain4, capsys):
    meas = write_json(tmp_path / "m.json", {"a": [0.9, 0.9, 0.9, 0.9]})
    assert main(["bounds", "--graph", chain4, "--measurements", meas, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 4
    assert data["rob_upper"] == pytest.approx(2.6)
    assert data["blue_count"] == 2


def test_bounds_triangle_exits_2(tmp_path, capsys):
    g = write_json(tmp_path / "g.json", {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})
    meas = write_json(tmp_path / "m.json", {"a": [1, 1, 1]})
    assert main(["bounds", "--graph", g, "--measurements", meas]) == 2
    assert "odd cycle" in capsys.readouterr().err


def test_bounds_out_of_range_measurement_exits_1(tmp_path, chain4, capsys):
    meas = write_json(tmp_path / "m.json", {"a": [1.5, 0, 0, 0]})
    assert main(["bounds", "--graph", chain4, "--measurements", meas]) == 1
    assert "a[0] out of [-1,1]" in capsys.readouterr().err


def test_bounds_length_mismatch_exits_1(tmp_path, chain4, capsys):
    meas = write_json(tmp_path / "m.json", {"a": [1, 1]})
    assert main(["bounds", "--graph", chain4, "--measurements", meas]) == 1
    assert "n=4" in capsys.readouterr().err


def test_bounds_bad_json_exits_1(tmp_path, chain4, capsys):
    bad = tmp_path / "m.json"
    bad.write_text("{not json")
    assert main(["bounds", "--graph", chain4, "--measurements", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "invalid JSON" in err and ":1:" in err


def test_sweep_golden_row(tmp_path):
    spec = write_json(
        tmp_path / "s.json", {"family": "chain", "sizes": [4], "gamma_t": [0.0]}
    )
    out = tmp_path / "rows.csv"
    assert main(["sweep", "--spec", spec, "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# entbound ")
    assert lines[1] == (
        "n,gamma_t,F,rob_lower,rob_upper,log_rob_lower,log_rob_upper,"
        "rel_ent_lower,rel_ent_upper"
    )
    assert lines[2] == "4,0,1,3,3,2,2,2,2"


def test_sweep_deterministic_and_ordered(tmp_path):
    spec = write_json(
        tmp_path / "s.json",
        {"family": "chain", "sizes": [6, 4], "gamma_t": [0.2, 0.0]},
    )
    out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    assert main(["sweep", "--spec", spec, "--out", str(out1)]) == 0
    assert main(["sweep", "--spec", spec, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = [l.split(",") for l in out1.read_text().splitlines()[2:]]
    assert [(r[0], r[1]) for r in rows] == [
        ("4", "0.2"),
        ("4", "0"),
        ("6", "0.2"),
        ("6", "0"),
    ]  # n-major (ascending), gamma_t-minor in listed order


def test_sweep_rejects_bad_spec(tmp_path, capsys):
    spec = write_json(
        tmp_path / "s.json", {"family": "chain", "sizes": [1], "gamma_t": [0.0]}
    )
    assert main(["sweep", "--spec", spec, "--out", str(tmp_path / "x.csv")]) == 1
    spec2 = write_json(
        tmp_path / "s2.json", {"family": "ring", "sizes": [4], "gamma_t": [0.0]}
    )
    assert main(["sweep", "--spec", spec2, "--out", str(tmp_path / "x.csv")]) == 1


def test_figures_outputs(tmp_path):
    out_dir = tmp_path / "figs"
    assert main(["figures", "--out-dir", str(out_dir)]) == 0
    for name in ("fig1.csv", "fig2.csv", "fig1.png", "fig2.png"):
        assert (out_dir / name).exists(), name
    fig1 = (out_dir / "fig1.csv").read_text().splitlines()
    assert fig1[0].startswith("# entbound ")
    header = fig1[1].split(",")
    lo, up = header.index("log_rob_lower"), header.index("log_rob_upper")
    for line in fig1[2:]:
        cells = line.split(",")
        assert float(cells[lo]) <= float(cells[up]) + 1e-12
    # gamma_t = 0 rows would be pure-state rows; fig1 grids are all noisy,
    # fig2 covers n up to 1000
    fig2 = (out_dir / "fig2.csv").read_text().splitlines()
    assert any(line.startswith("1000,") for line in fig2)


def test_figures_no_plots(tmp_path):
    out_dir = tmp_path / "figs"
    assert main(["figures", "--out-dir", str(out_dir), "--no-plots"]) == 0
    assert (out_dir / "fig1.csv").exists()
    assert not (out_dir / "fig1.png").exists()


def test_fig1_rows_cover_exactly_the_fidelity_positive_range():
    import math

    from entbound import figures

    rows = figures.fig1_rows()
    for gt in figures.FIG1_GAMMA_T:
        sub = [r for r in rows if r["gamma_t"] == gt]
        assert all(r["F"] > 0 for r in sub)
        assert max(r["n"] for r in sub) == math.floor(2.0 / (1.0 - math.exp(-gt)))
    assert all(r["rob_lower"] <= r["F"] * 2 ** 500 for r in rows)  # sanity: finite
    assert all((r["rob_lower"] > 0) <= (r["F"] > 0) for r in rows)


def test_fig2_closed_form_value_at_n1000():
    import math

    from entbound import figures

    gt = figures.FIG2_GAMMA_T[0]  # decay 0.999 per generator
    (row,) = [r for r in figures.fig2_rows() if r["n"] == 1000 and r["gamma_t"] == gt]
    p = (1 + 0.999) / 2
    h = -(p * math.log2(p) + (1 - p) * math.log2(1 - p))
    assert row["rel_ent_lower"] == pytest.approx(max(0.0, 500 - 1000 * h), abs=1e-9)


def test_oracle_command_passes(capsys):
    assert main(["oracle", "--seed", "3", "--n-max", "5"]) == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out and "[FAIL]" not in out
    assert "worst=" in out


def test_oracle_command_rejects_large_n_max(capsys):
    assert main(["oracle", "--n-max", "13"]) == 1
    assert "n-max" in capsys.readouterr().err


def test_oracle_command_detects_mutation(monkeypatch, capsys):
    true_fn = bounds.min_fidelity
    monkeypatch.setattr(bounds, "min_fidelity", lambda a: min(1.0, true_fn(a) + 0.01))
    assert main(["oracle", "--seed", "3", "--n-max", "4"]) == 3
    assert "[FAIL]" in capsys.readouterr().out


def test_unknown_option_exits_1():
    assert main(["bounds", "--nope"]) == 1
