"""CLI behavior: outputs, schemas, flag overrides, exit codes."""
import json
import math

import pytest

from ecokmap.cli import main
from ecokmap.csvio import read_csv
from ecokmap.svgplot import count_data_elements

BASE = {"r2": 3.5, "budgets": {"transient": 200, "record": 50, "lyap": 2000}}


@pytest.fixture
def config_path(tmp_path):
    def write(doc, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return write


def run(*argv):
    return main(list(argv))


class TestSimulate:
    def test_writes_orbit_csv_with_global_indices(self, config_path, tmp_path):
        out = tmp_path / "o"
        assert run("simulate", "--config", config_path(BASE), "--out", str(out)) == 0
        header, rows = read_csv(out / "orbit.csv")
        assert header == ["n", "x", "y"]
        assert len(rows) == 50
        assert int(rows[0][0]) == 201
        assert int(rows[-1][0]) == 250

    def test_plot_point_count_matches_csv(self, config_path, tmp_path):
        out = tmp_path / "o"
        assert run(
            "simulate", "--config", config_path(BASE), "--out", str(out), "--plot"
        ) == 0
        _, rows = read_csv(out / "orbit.csv")
        svg = (out / "orbit.svg").read_text()
        assert count_data_elements(svg) == len(rows)

    def test_steps_and_transient_flags_override(self, config_path, tmp_path):
        out = tmp_path / "o"
        assert run(
            "simulate", "--config", config_path(BASE), "--out", str(out),
            "--steps", "7", "--transient", "3",
        ) == 0
        _, rows = read_csv(out / "orbit.csv")
        assert len(rows) == 7
        assert int(rows[0][0]) == 4


class TestFixedPoints:
    def test_report_for_decoupled_low_growth(self, config_path, tmp_path):
        out = tmp_path / "o"
        doc = {"r1": 0.5, "r2": 0.5, "c2": 0.0, "c3": 0.0}
        assert run("fixed-points", "--config", config_path(doc), "--out", str(out)) == 0
        text = (out / "fixed_points.txt").read_text()
        assert "origin" in text
        origin_line = next(line for line in text.splitlines() if line.startswith("origin"))
        assert "attracting" in origin_line
        assert "row 1: true" in origin_line


class TestBifurcate:
    def test_csv_schema_and_row_count(self, config_path, tmp_path):
        out = tmp_path / "o"
        doc = dict(BASE, sweep={"points": 9, "lyap": 1500})
        assert run(
            "bifurcate", "--config", config_path(doc), "--out", str(out), "--plot"
        ) == 0
        header, rows = read_csv(out / "bifurcation.csv")
        assert header == ["param", "n", "x", "y", "period", "lambda1"]
        assert len(rows) == 9 * 50
        assert count_data_elements((out / "bifurcation.svg").read_text()) == len(rows)
        params = sorted({float(r[0]) for r in rows})
        assert params[0] == 2.8 and params[-1] == 4.0

    def test_grid_flag_overrides_point_count(self, config_path, tmp_path):
        out = tmp_path / "o"
        assert run(
            "bifurcate", "--config", config_path(BASE), "--out", str(out),
            "--grid", "5", "--steps", "10",
        ) == 0
        _, rows = read_csv(out / "bifurcation.csv")
        assert len(rows) == 5 * 10


class TestLyapunov:
    def test_csv_schema_and_summary(self, config_path, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(
            "lyapunov", "--config", config_path(BASE), "--out", str(out), "--plot"
        ) == 0
        header, rows = read_csv(out / "lyapunov.csv")
        assert header == ["n", "lambda1", "lambda2"]
        assert int(rows[-1][0]) == 2000
        assert count_data_elements((out / "lyapunov.svg").read_text()) == len(rows)
        assert float(rows[-1][1]) >= float(rows[-1][2])
        assert "lambda1=" in capsys.readouterr().out


class TestChaosGrid:
    def test_csv_schema_and_heatmap(self, config_path, tmp_path):
        out = tmp_path / "o"
        doc = dict(
            BASE,
            grid={
                "c2_lo": 0.1, "c2_hi": 0.7, "c2_points": 3,
                "c3_lo": 0.1, "c3_hi": 0.7, "c3_points": 3,
                "r2_values": [3.9],
                "lyap": 1500,
            },
        )
        assert run(
            "chaos-grid", "--config", config_path(doc), "--out", str(out), "--plot"
        ) == 0
        header, rows = read_csv(out / "chaos_grid.csv")
        assert header == ["c2", "c3", "r2", "lambda1", "label"]
        assert len(rows) == 9
        assert all(r[4].startswith(("period-", "aperiodic", "escaped")) for r in rows)
        assert count_data_elements((out / "chaos_grid.svg").read_text()) == 9

    def test_defaults_to_model_r2(self, config_path, tmp_path):
        out = tmp_path / "o"
        doc = dict(BASE, grid={"c2_points": 2, "c3_points": 2, "lyap": 1000})
        assert run("chaos-grid", "--config", config_path(doc), "--out", str(out)) == 0
        _, rows = read_csv(out / "chaos_grid.csv")
        assert {float(r[2]) for r in rows} == {3.5}


class TestPhase:
    def test_default_window_is_501_to_600(self, config_path, tmp_path):
        out = tmp_path / "o"
        assert run("phase", "--config", config_path(BASE), "--out", str(out), "--plot") == 0
        _, rows = read_csv(out / "phase.csv")
        assert int(rows[0][0]) == 501
        assert int(rows[-1][0]) == 600
        assert count_data_elements((out / "phase.svg").read_text()) == len(rows)

    def test_settled_regime_gives_tiny_tail_variance(self, config_path, tmp_path):
        out = tmp_path / "o"
        doc = {"r2": 2.0}  # attracting interior point regime
        assert run(
            "phase", "--config", config_path(doc), "--out", str(out), "--transient", "2000"
        ) == 0
        _, rows = read_csv(out / "phase.csv")
        xs = [float(r[1]) for r in rows]
        ys = [float(r[2]) for r in rows]
        mx = sum(xs) / len(xs)
        my = sum(ys) / len(ys)
        assert sum((v - mx) ** 2 for v in xs) / len(xs) < 1e-10
        assert sum((v - my) ** 2 for v in ys) / len(ys) < 1e-10


class TestExitCodes:
    def test_usage_error_is_1(self):
        assert run("bogus-command") == 1
        assert run("simulate") == 1  # missing --config

    def test_validation_error_is_2(self, config_path, capsys):
        assert run("simulate", "--config", config_path({"r2": 5.0})) == 2
        assert "r2" in capsys.readouterr().err
        assert run("simulate", "--config", config_path({})) == 2

    def test_runtime_error_is_3(self, config_path, tmp_path, capsys):
        # orbit escapes after ~52 steps: too few for a Lyapunov estimate
        doc = {
            "r1": 2.0, "r2": 1.5, "c1": 1.0, "c2": 0.0, "c3": 4.0, "c4": 0.0,
            "initial": {"x": 0.5, "y": 0.001},
            "budgets": {"transient": 0, "lyap": 2000},
        }
        assert run(
            "lyapunov", "--config", config_path(doc), "--out", str(tmp_path / "o")
        ) == 3
        assert "escaped" in capsys.readouterr().err

    def test_missing_config_file_is_3(self, tmp_path):
        assert run("simulate", "--config", str(tmp_path / "nope.json")) == 3


class TestDeterminism:
    def test_repeated_runs_byte_identical(self, config_path, tmp_path):
        doc = dict(BASE, sweep={"points": 5, "lyap": 1000})
        cfg = config_path(doc)
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            assert run("bifurcate", "--config", cfg, "--out", str(out), "--plot") == 0
            outs.append(out)
        for fname in ("bifurcation.csv", "bifurcation.svg"):
            assert (outs[0] / fname).read_bytes() == (outs[1] / fname).read_bytes()
