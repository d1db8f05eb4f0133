from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from orbitseries.cli import build_parser, run

SUBCOMMANDS = ["cpoly", "descent-poly", "funeq", "unitary", "scan-conjecture", "orbit-counts",
               "euler-factor", "asymptotics", "boundary-report", "igusa-check", "reduced", "hilbert-sd"]


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_cpoly_golden():
    assert call("cpoly", "2,1") == (0, "1 + x*q + x*q^2\n")
    assert call("cpoly", "2,1", "--method", "enum") == (0, "1 + x*q + x*q^2\n")


def test_both_with_diff():
    code, text = call("cpoly", "1,1", "--method", "both-with-diff")
    assert code == 0
    assert text == "enumeration: 1 + x*q\nmacmahon: 1 + x*q\ndiff: \n"
    code, text = call("cpoly", "2,2", "--method", "both-with-diff", "--format", "json")
    assert json.loads(text)["diff"] == []


def test_scan_csv():
    code, text = call("scan-conjecture", "--max-N", "10", "--format", "csv")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "lambda1,lambda2,value,stanton_covered"
    assert lines[1] == "2,1,-1,1"
    assert len(lines) == 1 + 20
    assert all(row.split(",")[2] != "0" for row in lines[1:])
    code, text = call("scan-conjecture", "--max-N", "10")
    assert json.loads(text)["zeros"] == []


def test_orbit_counts_csv():
    code, text = call("orbit-counts", "1,1", "--n-max", "6")
    assert text.splitlines()[1:] == ["1,1,1", "2,4,5", "3,5,10", "4,10,20", "5,7,27", "6,20,47"]


def test_funeq_text():
    code, text = call("funeq", "2,2", "--euler")
    assert code == 0
    assert text == ("C(2,2) satisfies C(1/x,1/q) = x^-2 q^-4 C(x,q)\n"
                    "Euler factor: d(1/p) = +1 p^4 t^2 d(p)\n")
    code, text = call("funeq", "2,1", "--format", "json")
    data = json.loads(text)
    assert data["polynomial"]["holds"] is False and data["polynomial"]["monic"] is False


def test_euler_factor_json():
    code, text = call("euler-factor", "2,1", "--prime", "2", "--series-k", "3")
    data = json.loads(text)
    assert data["series_prefix"] == ["1", "10", "56", "260"]


@pytest.mark.parametrize("argv, first", [
    (["descent-poly", "1,1,1"], "1 + 4*x + x^2"),
    (["unitary", "1^4"], "charney_davis: 0"),
    (["reduced", "1,1,1"], "(1 + 4*t + t^2) / ((1 - t)^3)"),
    (["hilbert-sd", "3"], "(1 + 4*t + t^2) / ((1 - t)^3)"),
    (["igusa-check", "2,1", "--prime", "3", "--degree", "8"], "equal"),
    (["asymptotics", "1,1", "--n-max", "2000"], "fitted_exponent: "),
])
def test_text_outputs(argv, first):
    code, text = call(*argv)
    assert code == 0
    assert text.splitlines()[0].startswith(first)


def test_boundary_report_json():
    code, text = call("boundary-report", "3,3")
    data = json.loads(text)
    assert data["type"] == "II" and data["unitary_factor"] == "1 + X^2*Y"


def test_exit_codes(capsys):
    assert call("cpoly", "0,1")[0] == 2
    assert call("cpoly", "a,b")[0] == 2
    assert call("nope")[0] == 2
    assert call("cpoly", "2,1", "--bogus")[0] == 2
    assert call("euler-factor", "2,1", "--prime", "4")[0] == 2
    assert call("boundary-report", "1,1")[0] == 2
    assert call("cpoly", "1,1,1,1", "--method", "enum", "--ceiling", "5")[0] == 3
    assert call("scan-conjecture", "--max-N", "2")[0] == 2


def test_ceiling_from_environment(monkeypatch):
    monkeypatch.setenv("ORBITSERIES_CEILING", "5")
    assert call("cpoly", "1,1,1,1", "--method", "enum")[0] == 3
    assert call("cpoly", "1,1,1,1", "--method", "enum", "--ceiling", "100")[0] == 0


@pytest.mark.parametrize("name", SUBCOMMANDS)
def test_help(name, capsys):
    assert call(name, "--help")[0] == 0
    text = capsys.readouterr().out
    assert "--format" in text and "--ceiling" in text
    sub = build_parser()._subparsers._group_actions[0].choices[name]
    assert sub.description and sub.description in " ".join(text.split())


def test_byte_identical_subprocess():
    argv = [sys.executable, "-m", "orbitseries", "euler-factor", "3,1", "--prime", "5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["partition"] == [3, 1]
