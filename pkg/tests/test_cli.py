import csv
import io
import json
import subprocess
import sys

import pytest

from qgenocchi.cli import main
from qgenocchi.report import canonical_json

MODEL = ["--q", "1/2", "--beta", "1/3", "--a", "1", "--b", "1", "--k", "1"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


EXIT_MATRIX = [
    (0, ["eval", *MODEL, "--n", "2", "--x", "1"]),
    (0, ["eval", "--q", "0.5", "--beta", "0.3", "--a", "1", "--b", "1", "--k", "1", "--n", "3", "--x", "0.25", "--method", "series"]),
    (0, ["zeta", *MODEL, "--s", "0", "--x", "1"]),
    (0, ["limit", "--target", "genocchi", "--n", "2"]),
    (1, []),
    (1, ["eval", *MODEL, "--n", "2"]),
    (1, ["eval", *MODEL, "--n", "2", "--x", "1", "--method", "magic"]),
    (1, ["table", *MODEL, "--n-max", "2", "--x-grid", "0:1"]),
    (1, ["limit", "--target", "ozden", "--n", "2"]),
    (2, ["eval", "--q", "3/2", "--beta", "1/3", "--a", "1", "--b", "1", "--k", "1", "--n", "2", "--x", "1"]),
    (2, ["eval", *MODEL, "--n", "2", "--x", "-1"]),
    (2, ["eval", "--q", "1/2", "--beta", "1/3", "--a", "1", "--b", "0", "--k", "1", "--n", "2", "--x", "1"]),
    (2, ["zeta", *MODEL, "--s", "0", "--x", "0"]),
    (3, ["eval", "--q", "1/2", "--beta", "1", "--a", "1", "--b", "1", "--k", "1", "--n", "1", "--x", "0"]),
    (3, ["eval", "--q", "0.5", "--beta", "1", "--a", "-1", "--b", "1", "--k", "1", "--n", "2", "--x", "0", "--method", "series"]),
    (3, ["eval", "--q", "0.9", "--beta", "0.9999", "--a", "1", "--b", "1", "--k", "1", "--n", "3", "--x", "0", "--method", "series"]),
    (4, ["limit", "--target", "ozden", "--beta", "11/10", "--a", "1", "--b", "1", "--k", "1", "--n", "6"]),
]


@pytest.mark.parametrize("expected,argv", EXIT_MATRIX)
def test_exit_code_matrix(expected, argv):
    code, out, _ = run(*argv)
    assert code == expected
    if expected in (0, 2, 3, 4):
        json.loads(out)


def test_pole_reports_index():
    code, out, err = run("eval", "--q", "1/2", "--beta", "1", "--a", "1", "--b", "1", "--k", "1", "--n", "1", "--x", "0")
    doc = json.loads(out)
    assert code == 3 and doc["errors"][0]["type"] == "PoleAtDenominator" and doc["errors"][0]["l"] == 1
    assert "PoleAtDenominator" in err


def test_budget_keeps_partial_result():
    code, out, _ = run("eval", "--q", "0.9", "--beta", "0.9999", "--a", "1", "--b", "1", "--k", "1",
                       "--n", "3", "--x", "0", "--method", "series")
    doc = json.loads(out)
    assert code == 3 and doc["results"]["converged"] is False and doc["errors"][0]["type"] == "BudgetExceeded"


def test_eval_exact_value():
    code, out, _ = run("eval", "--q", "1/2", "--beta", "1/3", "--a", "2", "--b", "1", "--k", "1", "--n", "2", "--x", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["method"] == "exact" and doc["results"]["exact"]["re"] == "-72/55"


def test_auto_method_picks_closed_for_decimals():
    code, out, _ = run("eval", "--q", "0.5", "--beta", "1/3", "--a", "1", "--b", "1", "--k", "1", "--n", "1", "--x", "0")
    assert code == 0 and json.loads(out)["results"]["method"] == "closed_corrected"


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", *MODEL, "--n", "3", "--x", "2"],
        ["table", *MODEL, "--n-max", "4", "--x-grid", "0:1:0.5", "--format", "json"],
        ["zeta", *MODEL, "--s-grid=-2:1:0.5,0:1:0.5", "--x", "1"],
        ["limit", "--target", "ozden", "--beta", "1/3", "--a", "1", "--b", "1", "--k", "2", "--n", "4", "--x", "1"],
        ["verify", "--identity", "distribution", "--grid", "smoke"],
    ],
)
def test_byte_determinism_and_canonical_round_trip(argv):
    first = run(*argv)
    second = run(*argv)
    assert first == second
    text = first[1]
    assert canonical_json(json.loads(text)) + "\n" == text


def test_table_csv():
    code, out, _ = run("table", *MODEL, "--n-max", "4", "--x-grid", "0:1:0.5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "x", "value_re", "value_im", "err_bound", "method"]
    body = rows[1:]
    assert len(body) == 15
    for r in body:
        if r[0] == "0":
            assert float(r[2]) == 0.0 and float(r[3]) == 0.0
    assert float(body[3][2]) == -1.5  # n = 1, x = 0


def test_verify_distribution():
    code, out, _ = run("verify", "--identity", "distribution", "--grid", "smoke", "--summary-only")
    doc = json.loads(out)
    assert code == 0
    assert "verdicts" not in doc["results"]
    rows = {r["variant_id"]: r for r in doc["results"]["summary"]}
    assert rows["corrected"]["full_pass"] and not rows["printed"]["full_pass"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgenocchi", "limit", "--target", "euler", "--n", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["passed"] is True
