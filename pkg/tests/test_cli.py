import json

import numpy as np
import pytest

from ghzw import cli, states


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_analyze_builtin_xi(capsys):
    code, payload = run_json(capsys, ["analyze", "--builtin", "xi"])
    assert code == 0
    assert abs(payload["ghz_min"] - 0.1) < 1e-9
    assert abs(payload["w_min"] - 1 / 15) < 1e-9
    assert payload["detected"] is False
    assert payload["genuinely_entangled"] is True


def test_analyze_superposition_window(capsys):
    code, payload = run_json(capsys, ["analyze", "--builtin", "superposition", "--a-sq", "0.4"])
    assert code == 0
    assert payload["detected"] is False
    assert payload["genuinely_entangled"] is True


def test_analyze_state_file(tmp_path, capsys):
    path = tmp_path / "ghz.json"
    states.save_state(states.make_ghz(1.3), str(path))
    code, payload = run_json(capsys, ["analyze", "--state", str(path)])
    assert code == 0
    assert payload["detected_by_ghz"] is True
    assert abs(payload["ghz_min"] + 0.5) < 1e-12


def test_analyze_rho_file(tmp_path, capsys):
    path = tmp_path / "rho.json"
    rho = states.mix([(0.5, states.make_ghz(0.0)), (0.5, states.make_w(0.0, 0.0))])
    states.save_rho(rho, str(path))
    code, payload = run_json(capsys, ["analyze", "--rho", str(path)])
    assert code == 0
    assert "criterion" in payload


def test_lambda_builtin_ghz(capsys):
    code, payload = run_json(capsys, ["lambda", "--builtin", "ghz"])
    assert code == 0
    assert abs(payload["lambda_analytic"] - 0.5) < 1e-12


def test_lambda_stochastic_cross_check(capsys):
    code, payload = run_json(
        capsys,
        ["lambda", "--builtin", "w", "--stochastic", "--restarts", "8", "--iters", "200"],
    )
    assert code == 0
    assert abs(payload["lambda_analytic"] - 2 / 3) < 1e-12
    assert abs(payload["lambda_stochastic"] - payload["lambda_analytic"]) < 1e-6


def test_canonical_subcommand(capsys):
    code, payload = run_json(capsys, ["canonical", "--builtin", "ghz"])
    assert code == 0
    lams = payload["lambdas"]
    assert abs(lams[0] - 1 / np.sqrt(2)) < 1e-8
    assert abs(lams[4] - 1 / np.sqrt(2)) < 1e-8
    assert payload["residual"] <= 1e-8


def test_ppt_subcommand(capsys):
    code, payload = run_json(capsys, ["ppt", "--builtin", "ghz"])
    assert code == 0
    for cut in ("A", "B", "C"):
        assert abs(payload[cut] + 0.5) < 1e-12


def test_scan_family_csv_output(tmp_path):
    path = tmp_path / "scan.csv"
    code = cli.run(
        ["scan-family", "--grid", "101", "--format", "csv", "--output", str(path)]
    )
    assert code == 0
    lines = path.read_text().strip().split("\n")
    assert len(lines) == 102
    assert lines[0].startswith("a_sq,")


def test_scan_family_stdout_json(capsys):
    code, rows = run_json(capsys, ["scan-family", "--grid", "11"])
    assert code == 0
    assert len(rows) == 11


def test_mixtures_subcommand(capsys):
    code, payload = run_json(
        capsys, ["mixtures", "--n-mixtures", "10", "--n-components", "3"]
    )
    assert code == 0
    assert payload["all_unwitnessed"] is True


def test_output_flag_writes_file(tmp_path):
    path = tmp_path / "verdict.json"
    code = cli.run(["analyze", "--builtin", "xi", "--output", str(path)])
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["detected"] is False


def test_missing_state_is_input_error(capsys):
    assert cli.run(["analyze"]) == 2
    assert "state" in capsys.readouterr().err


def test_conflicting_state_flags(tmp_path):
    path = tmp_path / "s.json"
    states.save_state(states.make_ghz(0.0), str(path))
    assert cli.run(["analyze", "--builtin", "ghz", "--state", str(path)]) == 2


def test_missing_file_is_input_error(tmp_path):
    assert cli.run(["analyze", "--state", str(tmp_path / "nope.json")]) == 2


def test_malformed_state_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert cli.run(["analyze", "--state", str(path)]) == 2
    path.write_text(json.dumps({"dims": [2, 2, 2], "amplitudes": [[1.0, 0.0]] * 8}))
    assert cli.run(["analyze", "--state", str(path)]) == 2  # unnormalized


def test_bad_a_sq_rejected():
    assert cli.run(["analyze", "--builtin", "superposition", "--a-sq", "1.5"]) == 2


def test_unknown_subcommand_exits_2():
    assert cli.run(["frobnicate"]) == 2
