import json
import os
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "wstar.cli"]


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("WSTAR_TOL", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CMD + list(args), capture_output=True, text=True, env=env)


def test_rep_spin_half():
    r = run("rep", "--two-j", "1")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["dim"] == 2
    assert data["h"] == [[[0.5, 0], [0, 0]], [[0, 0], [-0.5, 0]]]
    assert data["casimir_scalar"] == 0.75


def test_rep_rejects_negative_spin():
    r = run("rep", "--two-j", "-1")
    assert r.returncode == 2
    assert "error" in r.stderr


def test_usage_errors():
    assert run("rep").returncode == 2  # missing required flag
    assert run("rep", "--two-j", "1", "--bogus").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("rep", "--two-j", "1", "--format", "csv").returncode == 2


def test_code_build_contract_examples():
    ok = run("code", "build", "--two-j", "4", "--detect", "1", "--dim", "2")
    assert ok.returncode == 0
    data = json.loads(ok.stdout)
    assert data["detection_report"]["pass"] is True
    assert data["weight_support"] == [0, 2, 4]

    cap = run("code", "build", "--two-j", "2", "--detect", "1", "--dim", "2")
    assert cap.returncode == 2
    assert "weight-space dimension" in cap.stderr


def test_code_recover_roundtrip():
    r = run("code", "recover", "--two-j", "9", "--detect", "2", "--dim", "2",
            "--error-grade", "1", "--trials", "5", "--seed", "3")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["pass"] is True
    assert data["max_residual"] < 1e-8
    assert data["completeness_residual"] < 1e-10


def test_byte_identical_reruns():
    a = run("bound", "--two-j", "5", "--detect", "2")
    b = run("bound", "--two-j", "5", "--detect", "2")
    assert a.stdout == b.stdout
    c = run("enumerate", "--two-j", "3", "--random", "7")
    d = run("enumerate", "--two-j", "3", "--random", "7")
    assert c.stdout == d.stdout and c.returncode == 0


def test_enumerate_code_file_flow(tmp_path):
    code_file = tmp_path / "code.json"
    built = run("code", "build", "--two-j", "4", "--detect", "1", "--dim", "2",
                "--out", str(code_file))
    assert built.returncode == 0
    assert built.stdout == ""
    r = run("enumerate", "--two-j", "4", "--code", str(code_file))
    assert r.returncode == 0
    data = json.loads(r.stdout)
    # detection up to grade 1: Tr(P) B_d = A_d there
    assert abs(data["A"][0] - 2 * data["B"][0]) < 1e-12
    assert abs(data["A"][1] - 2 * data["B"][1]) < 1e-12
    assert data["identity_deviation"] < 1e-10


def test_enumerate_csv_shape():
    r = run("enumerate", "--two-j", "2", "--random", "1", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "d,A,B"
    assert len(lines) == 4


def test_filtration_verify_instances(tmp_path):
    assert run("filtration", "verify", "--instance", "su2", "--two-j", "3").returncode == 0
    assert run("filtration", "verify", "--instance", "hamming", "--n", "2").returncode == 0
    assert run("filtration", "verify", "--instance", "su2").returncode == 2  # missing --two-j

    gen = run("metric", "--n", "5", "--seed", "9", "--out", str(tmp_path / "m.json"))
    assert gen.returncode == 0
    r = run("filtration", "verify", "--instance", "classical", "--metric", str(tmp_path / "m.json"))
    assert r.returncode == 0
    data = json.loads((tmp_path / "m.json").read_text())
    assert data["roundtrip_exact"] is True


def test_metric_flag_validation():
    assert run("metric").returncode == 2
    assert run("metric", "--n", "3", "--metric", "x.json").returncode == 2
    assert run("metric", "--metric", "/nonexistent/m.json").returncode == 2


def test_tverberg_output_and_negative_affine():
    r = run("tverberg", "--dim", "2", "--parts", "2")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["coeffs"] == ["1/4", "3/4", "3/4", "1/4"]
    assert data["common_point"] == ["3/2", "3"]
    assert data["verified"] is True

    r = run("tverberg", "--dim", "1", "--parts", "2", "--affine", "-7/3", "5")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["points"] == ["5", "8/3", "1/3"]

    assert run("tverberg", "--dim", "1", "--parts", "2", "--affine", "0", "1").returncode == 2


def test_identity_check_and_bound():
    r = run("identity-check", "--two-j", "3", "--trials", "4")
    assert r.returncode == 0
    assert json.loads(r.stdout)["pass"] is True

    b = run("bound", "--two-j", "4", "--detect", "1")
    assert b.returncode == 0
    data = json.loads(b.stdout)
    assert data["k_max"] >= 2
    assert data["per_k"][0] == {"k": 1, "feasible": True}

    csv = run("bound", "--two-j", "4", "--detect", "1", "--format", "csv")
    assert csv.stdout.splitlines()[0] == "k,feasible"

    assert run("bound", "--two-j", "3", "--detect", "9").returncode == 2


def test_tolerance_env_and_flag():
    # unparsable env value is a usage error...
    r = run("rep", "--two-j", "1", env_extra={"WSTAR_TOL": "abc"})
    assert r.returncode == 2
    # ...unless the flag wins before the env is ever read
    r = run("rep", "--two-j", "1", "--tol", "1e-9", env_extra={"WSTAR_TOL": "abc"})
    assert r.returncode == 0
    assert run("rep", "--two-j", "1", "--tol", "-1").returncode == 2
    # a crippling tolerance makes verification fail: exit 1, not 2
    r = run("filtration", "verify", "--instance", "su2", "--two-j", "3",
            env_extra={"WSTAR_TOL": "1e-18"})
    assert r.returncode == 1
    assert json.loads(r.stdout)["pass"] is False


def test_help_exits_zero():
    assert run("--help").returncode == 0
    assert run("code", "--help").returncode == 0
