import json
import subprocess
import sys

import pytest

from homleibniz.cli import main, run
from helpers import BUNDLED_RUNS

FIXTURES = "tests/fixtures"


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "homleibniz", *argv], capture_output=True)


@pytest.mark.parametrize("argv,status", BUNDLED_RUNS, ids=[" ".join(a) for a, _ in BUNDLED_RUNS])
def test_bundled_runs_in_process(argv, status):
    code, text = run(argv + ["--json"])
    assert code == status
    report = json.loads(text)
    assert report["passed"] == (status == 0)
    assert set(report) >= {"formatVersion", "command", "instanceDigest", "checks", "numbers", "passed"}


@pytest.mark.parametrize("argv,status", BUNDLED_RUNS[:6], ids=[" ".join(a) for a, _ in BUNDLED_RUNS[:6]])
def test_machine_reports_are_byte_identical(argv, status):
    a, b = cli(*argv, "--json"), cli(*argv, "--json")
    assert a.returncode == b.returncode == status
    assert a.stdout == b.stdout and a.stdout


def test_exit_codes_on_fixtures():
    assert cli("check", "l2adjoint.json").returncode == 0
    assert cli("check", f"{FIXTURES}/failing.json").returncode == 1
    for bad in ("malformed.json", "bad-shape.json", "unknown-field.json", "not-json.json"):
        proc = cli("check", f"{FIXTURES}/{bad}")
        assert proc.returncode == 2 and proc.stderr.startswith(b"error:")
    assert cli("frobnicate", "zero.json").returncode == 2


def test_human_report_shows_witness(capsys):
    assert main(["check", f"{FIXTURES}/failing.json"]) == 1
    out = capsys.readouterr().out
    assert "✗" in out and "cm02" in out


def test_cohomology_numbers():
    _, text = run(["cohomology", "zero.json", "--json"])
    assert json.loads(text)["numbers"]["hDims"] == {"2": 4}
    _, text = run(["cohomology", "l2yau.json", "--json"])
    assert json.loads(text)["numbers"]["hDims"] == {"2": 0}


def test_deform_failure_reports_lambda_defect():
    code, text = run(["deform", "zerodeform.json"])
    assert code == 1 and "λ^2" in text


def test_equivalent_prints_morphism():
    code, text = run(["equivalent", "l2ext.json", "--cochain", "l2ext-shifted.json", "--json"])
    assert code == 0 and "F0" in json.loads(text)["data"]


def test_usage_errors():
    assert main(["equivalent", "l2adjoint.json"]) == 2
    assert main(["cohomology", "zero.json", "--degree", "5"]) == 2
