import json
import math

import pytest

from photonmol import cli_main


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = run_cli(capsys)
    assert code == 1
    assert "usage" in err.lower()


def test_help_exits_cleanly(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0


def test_unknown_subcommand(capsys):
    code, _, _ = run_cli(capsys, "simulate")
    assert code == 1


def test_point_at_single_drive_optimum(capsys):
    code, out, _ = run_cli(
        capsys, "point", "--j", "10", "--eps-a", "0.01", "--eps-b", "0",
        "--delta", "0.2887", "--u", "0.00385")
    assert code == 0
    payload = json.loads(out)
    assert payload["g2_a"] < 1e-2
    assert payload["solver"] == "MasterEquation"
    assert payload["params"]["coupling_j"] == 10.0


def test_point_with_params_file(tmp_path, capsys):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({"coupling_j": 3.0, "eps_a": 0.01,
                                "delta_a": 0.5, "delta_b": 0.5}))
    code, out, _ = run_cli(capsys, "point", "--params", str(path),
                           "--solver", "FullTruncated")
    assert code == 0
    payload = json.loads(out)
    assert payload["g2_a"] == pytest.approx(1.0, abs=1e-3)


def test_point_eta_conflicts_with_eps_b(capsys):
    code, _, err = run_cli(capsys, "point", "--j", "10", "--eta", "3",
                           "--eps-b", "0.01")
    assert code == 1
    assert "mutually exclusive" in err


def test_point_solver_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "point", "--j", "10", "--delta-a", "1",
                           "--delta-b", "2", "--solver", "Hierarchy")
    assert code == 2
    assert "solver error" in err


def test_optimize_dual_drive(capsys):
    code, out, _ = run_cli(capsys, "optimize", "--j", "10", "--eta", "3",
                           "--phi", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta_opt"] == pytest.approx(10.0 / 3.0, rel=0.10)
    assert payload["method"] == "Numeric"
    assert payload["g2_min"] < 1e-2


def test_optimize_accepts_infinite_ratio(capsys):
    code, out, _ = run_cli(capsys, "optimize", "--j", "10", "--eta", "inf",
                           "--grid-points", "32")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta_opt"] == pytest.approx(1.0 / (2 * math.sqrt(3.0)),
                                                 rel=0.15)


def test_sweep_end_to_end(tmp_path, capsys):
    config = {
        "base": {"coupling_j": 3.0, "eps_a": 0.01, "eps_b": 0.005},
        "axis1": {"parameter": "delta", "min": 0.0, "max": 1.0, "count": 2},
        "axis2": {"parameter": "phi", "min": 0.0, "max": 1.0, "count": 2},
        "solver": "Hierarchy",
    }
    config_path = tmp_path / "sweep.json"
    config_path.write_text(json.dumps(config))
    out_path = tmp_path / "result.csv"
    code, out, _ = run_cli(capsys, "sweep", "--config", str(config_path),
                           "--out", str(out_path), "--threads", "2")
    assert code == 0
    assert "4 rows" in out
    assert out_path.exists()
    assert (tmp_path / "result.csv.meta.json").exists()


def test_sweep_with_bad_config(tmp_path, capsys):
    config_path = tmp_path / "bad.json"
    config_path.write_text(json.dumps({"solver": "MasterEquation"}))
    code, _, err = run_cli(capsys, "sweep", "--config", str(config_path),
                           "--out", str(tmp_path / "x.csv"))
    assert code == 1


def test_figure_unknown_name(capsys, tmp_path):
    code, _, err = run_cli(capsys, "figure", "fig9", "--out-dir", str(tmp_path))
    assert code == 1
    assert "fig1a" in err


def test_figure_small_grid(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "figure", "fig4d", "--out-dir",
                           str(tmp_path), "--count", "9")
    assert code == 0
    paths = json.loads(out)
    assert (tmp_path / "fig4d.csv").exists()
    assert (tmp_path / "fig4d_plot.py").exists()
    assert paths["csv"].endswith("fig4d.csv")
