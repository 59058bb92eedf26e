import json
import os
import subprocess

import pytest

CLI = os.environ.get("DNIL_CLI", "dnil")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


@pytest.mark.parametrize(
    "poly, normal_form, member",
    [("x1^2", "-1*x0*x2", "false"), ("x0*x1", "0", "true"), ("x0^2", "0", "true")],
)
def test_reduce(poly, normal_form, member):
    r = run("reduce", "--m", "2", poly)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [normal_form, f"member={member}"]


def test_reduce_parse_error():
    r = run("reduce", "x-1")
    assert r.returncode == 2
    assert "parse error" in r.stderr


def test_member_exit_codes():
    assert run("member", "x0*x1").returncode == 0
    assert run("member", "x0*x2").returncode == 1


def test_member_json_certificate():
    r = run("--format", "json", "member", "x0*x1")
    report = json.loads(r.stdout)
    assert list(report) == ["command", "params", "result", "certificate", "elapsed_ms"]
    assert report["certificate"] == [{"cofactor": "1", "k": 1, "coefficient": "1/2"}]


@pytest.mark.parametrize("m, max_i, indices", [("2", "3", [2, 3, 4, 5]), ("3", "2", [3, 5, 7]), ("4", "1", [4, 7])])
def test_verify_ritt(m, max_i, indices):
    r = run("--format", "json", "verify", "ritt", "--m", m, "--max-i", max_i)
    assert r.returncode == 0
    results = json.loads(r.stdout)["result"]["results"]
    assert [c["detail"]["grassmann"] for c in results] == indices
    assert [c["detail"]["ideal"] for c in results] == indices


def test_verify_ritt_stretch():
    r = run("verify", "ritt", "--m", "4", "--max-i", "3")
    assert r.returncode == 0
    assert '"expected":13' in r.stdout


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "injectivity", "--m", "2", "--max-degree", "4", "--max-weight", "8"],
        ["verify", "constants", "--m", "3", "--max-degree", "3", "--max-weight", "8"],
        ["verify", "nilpotent", "--m", "2", "--samples", "25", "--seed", "7"],
        ["verify", "basis", "--m", "3"],
        ["verify", "triangular"],
        ["verify", "operator-nil", "--samples", "5"],
    ],
)
def test_verify_suites(args):
    r = run(*args)
    assert r.returncode == 0, r.stdout
    assert "FAIL" not in r.stdout


def test_verify_unknown_suite():
    assert run("verify", "bogus").returncode == 2


def test_verify_weight_floor_reports_odd_degrees():
    r = run("verify", "weight-floor", "--max-degree", "4")
    assert r.returncode == 1
    assert "FAIL D=3" in r.stdout


def test_witness():
    r = run("witness", "--kind", "element", "--a", "x0", "--b", "x0")
    assert r.returncode == 0
    assert r.stdout.startswith("k=2")
    r = run("--format", "json", "witness", "--kind", "operator", "--a", "x0*D", "--b", "x0")
    assert r.returncode == 0
    result = json.loads(r.stdout)["result"]
    assert result["found"] and result["k"] == 2 and result["product"] != "0"
    assert run("witness", "--kind", "element", "--a", "0", "--b", "x0").returncode == 2
    assert run("witness", "--kind", "operator", "--a", "x0*D", "--b", "x0", "--cap", "1").returncode == 1


def test_nilindex():
    assert run("nilindex", "--m", "3", "x2").stdout == "index=7\n"
    assert run("nilindex", "--operator", "x0*D").stdout == "index=2 bound=3\n"
    assert run("nilindex", "--m", "3", "x2", "--cap", "5").returncode == 1


def test_embed():
    r = run("embed", "x0*x2")
    assert r.returncode == 0
    assert r.stdout.strip() == "2*xi[0,0]∧eta[0,0]∧xi[0,1]∧eta[0,1]"


def test_max_terms_guard():
    r = run("--max-terms", "3", "verify", "ritt", "--m", "3", "--max-i", "2")
    assert r.returncode == 2
    assert "max-terms" in r.stderr


def test_determinism_and_out_file(tmp_path):
    args = ["--format", "json", "--seed", "5", "verify", "nilpotent", "--samples", "10"]
    first, second = run(*args), run(*args)
    a, b = json.loads(first.stdout), json.loads(second.stdout)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
    out = tmp_path / "report.json"
    assert run(*args[:4], "--out", str(out), *args[4:]).returncode == 0
    saved = json.loads(out.read_text())
    saved.pop("elapsed_ms")
    assert saved == a
