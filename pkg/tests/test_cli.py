import json
import subprocess
import sys

import pytest


def _run(*argv):
    return subprocess.run([sys.executable, "-m", "picentral.cli", *argv],
                          capture_output=True, text=True)


def _records(out):
    return [json.loads(line) for line in out.stdout.splitlines()
            if line.startswith("{")]


def test_check_proper_central():
    out = _run("check", "[x1,x2][x3,x4][x5,x6]", "A_3")
    assert out.returncode == 0
    recs = _records(out)
    assert recs and recs[0]["detail"]["verdict"] == "proper_central"


def test_check_identity():
    out = _run("check", "[x1,x2][x3,x4]", "UT_2")
    assert out.returncode == 0
    recs = _records(out)
    assert recs[0]["detail"]["verdict"] == "identity"


def test_codim_command_ut2():
    out = _run("codim", "--algebra", "UT_2", "--n", "1..4", "--mode", "exact")
    assert out.returncode == 0
    recs = _records(out)
    assert [r["detail"]["c_n"] for r in recs] == [1, 2, 6, 18]
    assert all(r["detail"]["c_n_delta"] == 0 for r in recs)


def test_exponent_command():
    out = _run("exponent", "--algebra", "A_8")
    assert out.returncode == 0
    rec = _records(out)[0]
    assert rec["detail"]["exp"] == 3
    assert rec["detail"]["delta_interval"] == [3, 3]


def test_certify_command():
    out = _run("certify", "--algebra", "A_3,UT_2")
    assert out.returncode == 0
    recs = {r["algebra"]: r for r in _records(out)}
    assert recs["A_3"]["detail"]["verdict"] == "certified"
    assert recs["UT_2"]["detail"]["verdict"] == "no witness found"


def test_unknown_algebra_fails_fast():
    out = _run("codim", "--algebra", "NO_SUCH", "--n", "2")
    assert out.returncode != 0


def test_cache_replay_identical(tmp_path):
    cache = str(tmp_path / "cache")
    first = _run("codim", "--algebra", "G", "--n", "3", "--mode", "exact",
                 "--cache", cache)
    second = _run("codim", "--algebra", "G", "--n", "3", "--mode", "exact",
                  "--cache", cache)
    assert first.returncode == second.returncode == 0
    assert _records(first) == _records(second)


def test_verify_paper_single_algebra():
    out = _run("verify-paper", "--algebra", "F")
    assert out.returncode == 0, out.stdout + out.stderr
    recs = _records(out)
    assert recs and all(r["status"] == "pass" for r in recs)
