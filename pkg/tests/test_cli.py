import csv
import io
import json
import os
import subprocess
import sys

import pytest

from zetacot.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, FIELDS, ZetaResult, main
from zetacot.oracle import FAULT_ENV


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("s, line", [("1", "zeta(2) = (1/6) * pi^2"), ("3", "zeta(6) = (1/945) * pi^6"), ("4", "zeta(8) = (1/9450) * pi^8")])
def test_even_prints_closed_form(s, line):
    code, out = run("even", s)
    assert code == EXIT_OK
    assert out.splitlines()[0] == line


def test_even_numeric_and_verify():
    code, out = run("even", "2", "--numeric", "--verify")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[1].startswith("zeta(4) ≈ 1.08232323371113819")
    assert lines[-1] == "verify=ok"


def test_even_verify_failure_exit(monkeypatch):
    monkeypatch.setenv(FAULT_ENV, "6")
    code, out = run("even", "3", "--verify")
    assert code == EXIT_VERIFY
    assert "verify=FAIL" in out


@pytest.mark.parametrize("argv", [("even", "0"), ("any", "1"), ("any", "0"), ("table", "1"), ("check", "1"), ("bogus",), ("even", "x")])
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == EXIT_USAGE


def test_any_zeta3():
    code, out = run("any", "3", "--prec", "128")
    assert code == EXIT_OK
    assert out.startswith("zeta(3) ≈ 1.20205690315959428539")


def test_any_verify_and_parts():
    code, out = run("any", "2", "--prec", "128", "--verify", "--show-parts")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("zeta(2) ≈ 1.6449340668482264364")
    assert lines[1].startswith("psi^(1)(1/4) = 17.19732915")
    assert lines[2].startswith("psi^(1)(3/4) = 2.54187964")
    assert lines[-1] == "verify=ok"


def test_any_verify_failure(monkeypatch):
    monkeypatch.setenv(FAULT_ENV, "2")
    code, out = run("any", "3", "--verify")
    assert code == EXIT_VERIFY


def test_default_precision_env(monkeypatch):
    monkeypatch.setenv("ZETA_DEFAULT_PREC", "64")
    _, out = run("table", "2", "--format", "json")
    assert json.loads(out)[0]["precision_bits"] == 64
    monkeypatch.delenv("ZETA_DEFAULT_PREC")
    _, out = run("table", "2", "--format", "json")
    assert json.loads(out)[0]["precision_bits"] == 128


def test_table_text_rows():
    code, out = run("table", "8", "--format", "text")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 7
    assert "exact=(1/6)*pi^2" in lines[0]
    assert "exact=(1/90)*pi^4" in lines[2]
    assert "exact=(1/945)*pi^6" in lines[4]
    assert "exact=(1/9450)*pi^8" in lines[6]
    assert "polygamma" in lines[1]


def test_table_json_single_row():
    code, out = run("table", "2", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert len(rows) == 1
    row = rows[0]
    assert row["argument"] == 2
    assert row["exact"] == "(1/6)*pi^2"
    assert list(row) == list(FIELDS)


def test_table_csv_columns():
    _, out = run("table", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["argument"]) for r in rows] == [2, 3, 4, 5]
    assert rows[1]["exact"] == ""
    assert tuple(rows[0]) == FIELDS


def test_json_round_trip():
    _, out = run("table", "12", "--format", "json")
    rows = json.loads(out)
    for row in rows:
        result = ZetaResult.from_dict(row)
        assert result.to_dict() == row
        assert result.argument == row["argument"]


def test_text_and_json_digits_agree():
    _, text = run("table", "6", "--format", "text")
    _, js = run("table", "6", "--format", "json")
    for line, row in zip(text.splitlines(), json.loads(js)):
        assert f"numeric={row['numeric']} " in line


def test_zeta_result_invariants():
    with pytest.raises(ValueError):
        ZetaResult(2, "exact", "polygamma", 0.0)
    with pytest.raises(ValueError):
        ZetaResult(3, "numeric", "dirichlet_oracle", 0.0)
    with pytest.raises(ValueError):
        ZetaResult(3, "fuzzy", "cotangent", 0.0)


def test_check_small_passes():
    code, out = run("check", "2")
    assert code == EXIT_OK
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_check_fault_injection(monkeypatch):
    monkeypatch.setenv(FAULT_ENV, "4")
    code, out = run("check", "6")
    assert code == EXIT_VERIFY
    assert "FAIL exact_vs_bernoulli: first failure at s=4" in out


def test_console_script_subprocess():
    env = dict(os.environ)
    env.pop(FAULT_ENV, None)
    proc = subprocess.run([sys.executable, "-m", "zetacot.cli", "even", "1"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "zeta(2) = (1/6) * pi^2"
    proc = subprocess.run([sys.executable, "-m", "zetacot.cli", "even", "0"], capture_output=True, text=True, env=env)
    assert proc.returncode == 2
