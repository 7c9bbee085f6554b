"""Contract tests for the command-line binary: output schema, pinned values,
exit codes, and determinism. The binary path comes from MOONJ_CLI (set by the
test harness) with a fallback to the default build tree."""

import json
import os
import pathlib
import subprocess

import pytest

_FALLBACK = pathlib.Path(__file__).resolve().parents[2] / "build" / "moonj"
CLI = os.environ.get("MOONJ_CLI", str(_FALLBACK))

pytestmark = pytest.mark.skipif(not os.path.exists(CLI), reason="CLI binary not built")


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("MOON_DIGITS", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env, timeout=300)
    return proc


def run_json(*args, expect_code=0, env_extra=None):
    proc = run(*args, env_extra=env_extra)
    assert proc.returncode == expect_code, proc.stderr
    record = json.loads(proc.stdout)
    assert list(record.keys()) == ["command", "inputs", "result", "version"]
    assert record["version"] == "0.1.0"
    return record


def test_expand_hexagonal_values():
    record = run_json("expand", "rho", "9")
    assert record["command"] == "expand"
    coeffs = record["result"]["coefficients"]
    assert coeffs[3] == "13824"
    assert coeffs[6] == "-39744"
    assert coeffs[9] == "1920024/35"
    assert coeffs[:3] == ["0", "0", "0"]


def test_expand_square_values():
    record = run_json("expand", "i", "6")
    coeffs = record["result"]["coefficients"]
    assert coeffs[0] == "1728"
    assert coeffs[6] == "1594112/5"


def test_expand_csv_format():
    proc = run("expand", "i", "6", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "index,value"
    assert lines[1] == "0,1728"
    assert lines[-1] == "6,1594112/5"


def test_expand_deterministic():
    first = run("expand", "rho", "30")
    second = run("expand", "rho", "30")
    assert first.stdout == second.stdout


def test_expand_order_cap():
    assert run("expand", "rho", "501").returncode == 2
    assert run("expand", "rho", "501", "--cap", "600").returncode == 0


def test_expand_bad_case():
    assert run("expand", "fischer", "4").returncode == 2


def test_flatcoord_coefficients():
    record = run_json("flatcoord", "rho", "4")
    assert record["result"]["coefficients"] == ["0", "1", "0", "0", "-1/6"]


def test_flatcoord_eval():
    record = run_json("flatcoord", "i", "--eval", "1/3")
    value = record["result"]["value"]
    assert value["digits"] == 50
    assert float(value["re"]) == pytest.approx(0.3830612321094436, rel=1e-12)
    assert abs(float(value["im"])) < 1e-40


def test_flatcoord_eval_decimal():
    record = run_json("flatcoord", "rho", "--eval", "0.5")
    assert float(record["result"]["value"]["re"]) == pytest.approx(0.4901752198773985, rel=1e-12)


def test_flatcoord_needs_order_or_eval():
    assert run("flatcoord", "rho").returncode == 2


def test_flatcoord_outside_disk():
    assert run("flatcoord", "i", "--eval", "3/5").returncode == 3


def test_verify_square_third():
    record = run_json("verify", "i", "1/3")
    result = record["result"]
    assert result["pass"] is True
    assert result["exact_rhs"] == "1906624/225"
    assert float(result["rhs"]["re"]) == pytest.approx(1906624 / 225, rel=1e-12)
    assert result["digits_matched"] >= 25


def test_verify_symbolic_point():
    record = run_json("verify", "rho", "sqrt3-1")
    result = record["result"]
    assert result["pass"] is True
    assert result["exact_rhs"] == ""  # populated only for rational t
    assert float(result["rhs"]["re"]) == pytest.approx(1728.0, abs=1e-9)


def test_verify_origin():
    record = run_json("verify", "i", "0")
    assert record["result"]["pass"] is True
    assert record["result"]["exact_rhs"] == "1728"


def test_verify_pole():
    proc = run("verify", "i", "0.6")
    assert proc.returncode == 3
    assert "error" in proc.stderr


def test_jeval_fixed_points():
    record = run_json("jeval", "i")
    assert float(record["result"]["j"]["re"]) == pytest.approx(1728.0, abs=1e-9)
    record = run_json("jeval", "0.5+0.5i")
    assert float(record["result"]["j"]["re"]) == pytest.approx(1728.0, abs=1e-9)


def test_jeval_walkthrough_point():
    record = run_json("jeval", "1.4243556206i")
    assert float(record["result"]["j"]["re"]) == pytest.approx(8473.8844, abs=1e-3)


def test_jeval_lower_half_plane():
    assert run("jeval", "0.5-0.5i").returncode == 3


def test_jeval_bad_literal():
    assert run("jeval", "xyz").returncode == 2


def test_unknown_subcommand():
    assert run("frobnicate").returncode == 2


def test_suite_exact():
    record = run_json("suite", "--which", "exact")
    result = record["result"]
    assert result["all_pass"] is True
    suites = result["suites"]
    assert len(suites) == 1
    names = [c["name"] for c in suites[0]["checks"]]
    assert "hexagonal-identity-60" in names
    assert "square-identity-40" in names
    assert all(c["pass"] for c in suites[0]["checks"])


def test_moon_digits_env():
    record = run_json("flatcoord", "i", "--eval", "1/3", env_extra={"MOON_DIGITS": "30"})
    assert record["result"]["value"]["digits"] == 30
    proc = run("jeval", "i", env_extra={"MOON_DIGITS": "bogus"})
    assert proc.returncode == 2
