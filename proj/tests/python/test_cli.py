import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("TSALLISQ_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="TSALLISQ_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_entropy_classical_table():
    r = run("entropy", "--dist", "[0.5, 0.5]", "--q", "2")
    assert r.returncode == 0
    assert "0.5" in r.stdout
    assert "S_1" in r.stdout


def test_entropy_json():
    r = run("entropy", "--dist", "[0.5, 0.5]", "--q", "2", "--output", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["kind"] == "classical"
    assert out["tsallis"] == pytest.approx(0.5, abs=1e-12)
    assert out["shannon"] == pytest.approx(math.log(2.0), abs=1e-12)


def test_entropy_requires_q():
    r = run("entropy", "--dist", "[0.5, 0.5]")
    assert r.returncode == 2


def test_entropy_rejects_denormalized_input():
    r = run("entropy", "--dist", "[0.5, 0.6]", "--q", "2")
    assert r.returncode == 2
    assert "error" in r.stderr.lower()


def test_entropy_requires_exactly_one_source():
    r = run("entropy", "--q", "2")
    assert r.returncode == 2
    r = run("entropy", "--q", "2", "--dist", "[1.0]", "--joint", "[[1.0]]")
    assert r.returncode == 2


def test_cond_classical():
    r = run("cond", "--joint", "[[0.4, 0.1], [0.2, 0.3]]", "--q", "2", "--output", "json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["value"] == pytest.approx(0.4, abs=1e-12)


def test_gen_ppt_cond_pipeline(tmp_path):
    state = tmp_path / "werner.json"
    r = run("gen", "werner", "--x", "0.9", "--out", str(state))
    assert r.returncode == 0
    doc = json.loads(state.read_text())
    assert doc["dA"] == 2 and doc["dB"] == 2
    assert doc["re"][1][1] == pytest.approx((1 - 0.9) / 4 + 0.9 / 2, abs=1e-9)

    r = run("ppt", "--state", str(state))
    assert r.returncode == 0
    assert "NPT" in r.stdout and "entangled" in r.stdout

    r = run("cond", "--state", str(state), "--q", "1")
    assert r.returncode == 0
    assert "entangled" in r.stdout

    r = run("cond", "--state", str(state), "--q", "1", "--output", "json")
    out = json.loads(r.stdout)
    assert out["verdict"] == "negative => entangled"
    # S(AB) - S(A) for the x = 0.9 state: spectrum {0.925, 0.025 x3} minus ln 2
    a, b = (1 - 0.9) / 2, (1 + 3 * 0.9) / 2
    expected = -(1.5 * a * math.log(a) + 0.5 * b * math.log(b))
    assert out["value"] == pytest.approx(expected, abs=1e-9)


def test_cond_inconclusive_below_threshold(tmp_path):
    state = tmp_path / "w05.json"
    assert run("gen", "werner", "--x", "0.5", "--out", str(state)).returncode == 0
    r = run("cond", "--state", str(state), "--q", "1")
    assert r.returncode == 0
    assert "inconclusive" in r.stdout
    # but q = 5 detects x = 0.5 (threshold ~0.415)
    r = run("cond", "--state", str(state), "--q", "5")
    assert "entangled" in r.stdout


def test_ppt_separable(tmp_path):
    state = tmp_path / "w02.json"
    run("gen", "werner", "--x", "0.2", "--out", str(state))
    r = run("ppt", "--state", str(state), "--output", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["positive"] is True
    assert out["min_eigenvalue"] == pytest.approx((1 - 3 * 0.2) / 4, abs=1e-9)


def test_werner_scan_csv():
    r = run("werner-scan", "--q-grid", "2", "--output", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "q,x_star,solver_residual"
    q, x_star, residual = lines[1].split(",")
    assert float(q) == 2.0
    assert float(x_star) == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-9)
    assert abs(float(residual)) < 1e-10


def test_werner_scan_default_grid_is_deterministic():
    a = run("werner-scan", "--output", "csv")
    b = run("werner-scan", "--output", "csv")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    assert len(a.stdout.strip().splitlines()) == 41  # header + 40 grid points


def test_criteria_table_json():
    r = run("werner-scan", "--criteria", "--output", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["ppt_threshold"] == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert out["von_neumann_zero"] == pytest.approx(0.7476138334, abs=1e-9)
    assert out["q_infinity_limit"] == pytest.approx(out["ppt_threshold"], abs=1e-8)
    assert out["bell_bound"] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-12)


def test_axioms_exit_code_and_json_lines():
    r = run("axioms", "--trials", "25", "--seed", "11", "--q-grid", "0.5,2", "--output", "json")
    assert r.returncode == 0
    reports = [json.loads(line) for line in r.stdout.strip().splitlines()]
    assert len(reports) >= 10
    assert all(rep["passed"] for rep in reports)
    ids = {rep["axiom_id"] for rep in reports}
    assert {"I*", "II*", "III*", "pseudoadditivity", "correspondence"} <= ids


def test_positivity_run():
    r = run("positivity", "--samples", "20", "--seed", "5", "--q-grid", "1,2",
            "--inject-singlet", "--output", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["violations"] == 0
    assert out["passed"] is True
    assert out["control_value"] == pytest.approx(-math.log(2.0), abs=1e-9)
    assert out["n_samples"] == 20


def test_ensemble_roundtrip(tmp_path):
    ens = tmp_path / "ens.json"
    r = run("gen", "ensemble", "--seed", "31", "--out", str(ens))
    assert r.returncode == 0
    doc = json.loads(ens.read_text())
    assert "weights" in doc and "p_a" in doc and "p_b" in doc
    r = run("cond", "--ensemble", str(ens), "--q", "2", "--output", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["value"] == pytest.approx(out["assembled_value"], abs=1e-9)
    assert out["verdict"] == "nonnegative => inconclusive"


def test_missing_file_is_usage_error():
    r = run("ppt", "--state", "/nonexistent/state.json")
    assert r.returncode == 2
    assert "error" in r.stderr.lower()


def test_unknown_subcommand():
    r = run("frobnicate")
    assert r.returncode == 2
