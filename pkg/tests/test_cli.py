import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "su2words", *args],
        capture_output=True,
        text=True,
        timeout=600,
    )
    return proc


def test_trace_commutator():
    proc = run_cli("trace", "[a,b]")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "x^2 - x*y*z + y^2 + z^2 - 2"
    data = json.loads(lines[1])
    assert {"e": [2, 0, 0], "c": "1"} in data["terms"]


def test_trace_single_generator():
    proc = run_cli("trace", "a")
    assert proc.stdout.splitlines()[0] == "x"


def test_trace_json_format():
    proc = run_cli("trace", "[[a,b],[a^3,b^2]]", "--format", "json")
    data = json.loads(proc.stdout)
    assert data["word"] == "abABa^3b^2A^3BaBAb^2a^3B^2A^3"
    assert len(data["terms"]) > 10


def test_trace_parse_error_exit_code():
    proc = run_cli("trace", "[a,b")
    assert proc.returncode == 1
    assert "position" in proc.stderr


def test_bad_flag_exit_code():
    proc = run_cli("check", "--m", "3")  # missing --n/--n-max
    assert proc.returncode == 1


def test_region_exact_member():
    proc = run_cli("region", "0", "1", "1", "--format", "json")
    data = json.loads(proc.stdout)
    assert data["in_region"] is True
    assert data["kappa"] == "0"
    assert data["point"]["exact"] is True


def test_region_non_member():
    proc = run_cli("region", "2", "2", "-2", "--format", "json")
    data = json.loads(proc.stdout)
    assert data["in_region"] is False
    assert data["kappa"] == "18"


def test_region_float_input():
    proc = run_cli("region", "0.5", "0.5", "0.5")
    assert proc.returncode == 0
    assert "in_region true" in proc.stdout


def test_check_single_n_json():
    proc = run_cli("check", "--m", "3", "--n", "2", "--format", "json")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["verdict"] == "SurjectiveCertified"
    assert data["witness"] == {"x": "0", "y": "1", "z": "1", "exact": True}
    assert data["n"] == 2 and data["m"] == 3


def test_check_table_has_mod_column():
    proc = run_cli("check", "--m", "1", "--n", "2")
    assert proc.returncode == 0
    header = proc.stdout.splitlines()[0]
    assert "n%3" in header and "verdict" in header and "residual" in header


def test_attain_commutator_json():
    proc = run_cli("attain", "[a,b]", "--format", "json")
    data = json.loads(proc.stdout)
    assert data["verdict"] == "SurjectiveCertified"
    assert data["method"] == "TraceAttainsMinusTwo"
    assert data["witness"]["exact"] is True


def test_attain_residual_dump(tmp_path):
    out = tmp_path / "landscape.csv"
    proc = run_cli("attain", "[a,b]", "--step", "0.5", "--dump-residuals", str(out))
    assert proc.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x,y,z,trace"
    assert len(lines) > 100


def test_verify_small_deterministic():
    a = run_cli("verify", "--samples", "25", "--seed", "7")
    b = run_cli("verify", "--samples", "25", "--seed", "7")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "PASS" in a.stdout and "FAIL" not in a.stdout


def test_verify_json_format():
    proc = run_cli("verify", "--samples", "10", "--seed", "3", "--format", "json")
    data = json.loads(proc.stdout)
    assert data["passed"] is True
    names = [c["name"] for c in data["checks"]]
    assert "cayley_hamilton" in names and "pell_identity_exact" in names
