import json
import math
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("PTQ_CLI", "build/ptq")
SCHEMAS = Path(os.environ.get("PTQ_SCHEMAS", Path(__file__).resolve().parents[2] / "schemas"))


def run(*args, env=None, check_rc=None):
    full_env = dict(os.environ)
    full_env.pop("PTQ_TOLERANCE_SCALE", None)
    full_env.pop("PTQ_QUADRATURE_TOL", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    if check_rc is not None:
        assert proc.returncode == check_rc, proc.stderr
    return proc


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def csv_rows(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    header = lines[0].split(",")
    return [dict(zip(header, l.split(","))) for l in lines[1:]]


def test_spectrum_depth_three():
    out = run("spectrum", "--mass", "1", "--depth", "3", "--alpha", "1", check_rc=0).stdout
    assert out.startswith("# ptq spectrum v1\n")
    assert "# q=2 " in out
    rows = csv_rows(out)
    assert [float(r["energy"]) for r in rows] == [-2.0, -0.5, 0.0, -0.5, -2.0]
    assert [r["normalizable"] for r in rows] == ["true", "true", "false", "false", "false"]
    assert rows[2]["norm_constant"] == ""


def test_spectrum_depth_one_json():
    doc = json.loads(run("spectrum", "--depth", "1", "--alpha", "1", "--mass", "1", "--format", "json", check_rc=0).stdout)
    jsonschema.validate(doc, schema("spectrum"))
    assert doc["q"] == 1.0
    bound = [s for s in doc["states"] if s["normalizable"]]
    assert len(bound) == 1 and bound[0]["energy"] == -0.5


@pytest.mark.parametrize("args", [["--depth", "0"], ["--depth", "-1"], ["--alpha", "0"], ["--mass", "2"]])
def test_spectrum_usage_errors(args):
    proc = run("spectrum", *args)
    assert proc.returncode == 2
    assert "usage error" in proc.stderr


def test_si_mode_allows_explicit_units():
    doc = json.loads(run("spectrum", "--si", "--mass", "2", "--hbar", "2", "--depth", "3", "--format", "json", check_rc=0).stdout)
    # q(q+1) = 2 m D / (alpha hbar)^2 = 3
    assert math.isclose(doc["q"] * (doc["q"] + 1), 3.0, rel_tol=1e-14)


def test_eigenfunction_values():
    doc = json.loads(run("eigenfunction", "--q", "1", "--n", "0", "--samples", "3", "--format", "json", check_rc=0).stdout)
    jsonschema.validate(doc, schema("eigenfunction"))
    mid = doc["samples"][1]
    assert mid["u"] == 0.0 and mid["psi"] == 1.0
    assert math.isclose(mid["psi_normalized"], math.sqrt(2) / 2, rel_tol=1e-15)
    odd = json.loads(run("eigenfunction", "--q", "2", "--n", "1", "--samples", "5", "--format", "json", check_rc=0).stdout)
    assert odd["samples"][2]["psi"] == 0.0


def test_eigenfunction_non_normalizable_warns():
    proc = run("eigenfunction", "--q", "3/2", "--n", "2", check_rc=0)
    assert "warning" in proc.stderr
    assert "# warning:" in proc.stdout
    rows = csv_rows(proc.stdout)
    assert rows and all(r["psi_normalized"] == "" for r in rows)
    doc = json.loads(run("eigenfunction", "--q", "1.5", "--n", "2", "--format", "json", check_rc=0).stdout)
    jsonschema.validate(doc, schema("eigenfunction"))
    assert doc["q_exact"] == "3/2" and not doc["normalizable"] and doc["warning"]


def test_classical_one_period():
    doc = json.loads(run("classical", "--eps", "0.5", "--xi0", "0.3", "--format", "json", check_rc=0).stdout)
    jsonschema.validate(doc, schema("classical"))
    assert doc["max_deviation"] < 1e-8
    H = [r["H"] for r in doc["rows"]]
    assert max(abs(h + 0.5) for h in H) / 0.5 < 1e-10
    assert math.isclose(doc["rows"][-1]["t"], doc["period"], rel_tol=1e-14)


def test_classical_near_harmonic_period():
    out = run("classical", "--eps", "0.999", "--format", "csv", check_rc=0).stdout
    assert "# max_deviation=" in out
    period = float(out.split("period=")[1].split()[0])
    assert math.isclose(period, 2 * math.pi / math.sqrt(2), rel_tol=1e-3)


@pytest.mark.parametrize("eps", ["0", "1", "1.5", "-0.2"])
def test_classical_rejects_unbound_energy(eps):
    assert run("classical", "--eps", eps).returncode == 2


def test_verify_rhp_passes():
    proc = run("verify", "--suite", "rhp", check_rc=0)
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema("verify_report"))
    assert doc["summary"]["passed"]
    assert any(c["check"].startswith("fixtures_exact") for c in doc["checks"])


def test_verify_all_is_byte_stable():
    a = run("verify", "--suite", "all", "--seed", "42", check_rc=0).stdout
    b = run("verify", "--suite", "all", "--seed", "42", check_rc=0).stdout
    assert a == b
    jsonschema.validate(json.loads(a), schema("verify_report"))


def test_verify_zero_tolerance_fails_with_report():
    proc = run("verify", "--suite", "classical", "--tolerance", "0")
    assert proc.returncode == 1
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema("verify_report"))
    assert doc["summary"]["failed"] > 0
    assert doc["tolerance_override"] == 0


def test_verify_environment_overrides():
    doc = json.loads(run("verify", "--suite", "gegenbauer", env={"PTQ_TOLERANCE_SCALE": "10"}, check_rc=0).stdout)
    assert doc["tolerance_scale"] == 10
    assert run("verify", env={"PTQ_QUADRATURE_TOL": "bogus"}).returncode == 2


def test_verify_unknown_suite():
    assert run("verify", "--suite", "nope").returncode == 2


def test_limits_hermite():
    doc = json.loads(run("limits", "hermite", "--n", "2", "--sweep", "10,100,1000", "--format", "json", check_rc=0).stdout)
    jsonschema.validate(doc, schema("limits"))
    gaps = [r["gap"] for r in doc["rows"]]
    for got, want in zip(gaps, [0.2, 0.02, 0.002]):
        assert math.isclose(got, want, rel_tol=1e-14)
    assert doc["monotone"]


def test_limits_harmonic_and_single_point():
    out = run("limits", "harmonic", "--n", "0", "--sweep", "10,100,1000", check_rc=0).stdout
    assert "# monotone=true" in out
    assert run("limits", "hermite", "--sweep", "50", check_rc=0).returncode == 0
    assert run("limits", "hermite", "--sweep", "100,10").returncode == 2


def test_csv_conventions():
    out = run("spectrum", "--depth", "3").stdout
    assert "\r" not in out
    for line in out.splitlines()[3:]:
        for field in line.split(",")[1:2]:
            digits = field.lstrip("-").replace(".", "").split("e")[0].lstrip("0")
            assert len(digits) <= 12
