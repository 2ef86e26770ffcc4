"""Command line interface: records, formats, exit codes."""

import json
import subprocess
import sys

import pytest

from degenbell import verifier
from degenbell.cli import (
    CSV_COLUMNS,
    FAMILIES,
    main,
    make_record,
    record_from_csv_row,
    record_from_json,
    record_to_csv_row,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines()]


def test_table_s2_json(capsys):
    code, out, err = run_cli(capsys, "table", "--family", "s2", "--n-max", "3")
    assert code == 0 and err == ""
    rows = json_lines(out)
    assert len(rows) == 10
    assert list(rows[0]) == list(CSV_COLUMNS)
    assert rows[-1] == {
        "family": "s2",
        "n": 3,
        "k": 3,
        "r": None,
        "lambda": None,
        "x": None,
        "value": "1",
    }


def test_table_s2_ext_symbolic(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--family", "s2_ext", "--n-max", "2",
        "--r", "1", "--lambda", "symbolic",
    )
    assert code == 0
    rows = json_lines(out)
    assert rows[0]["value"] == ["1"]
    by_nk = {(row["n"], row["k"]): row for row in rows}
    assert by_nk[(2, 1)]["value"] == ["3", "-1"]
    assert by_nk[(2, 1)]["lambda"] == "symbolic"
    assert by_nk[(2, 1)]["r"] == 1


def test_table_csv_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--family", "bell_deg", "--n-max", "2",
        "--lambda", "1/2", "--format", "csv",
    )
    assert code == 0
    import csv as csv_mod
    import io

    reader = csv_mod.reader(io.StringIO(out))
    header = next(reader)
    assert header == list(CSV_COLUMNS)
    rows = [record_from_csv_row(row) for row in reader]
    code, jout, _ = run_cli(
        capsys, "table", "--family", "bell_deg", "--n-max", "2", "--lambda", "1/2"
    )
    assert rows == [record_from_json(line) for line in jout.splitlines()]


def test_record_helpers_roundtrip():
    rec = make_record("s2_ext", 4, k=2, r=1, lam="symbolic", value=["1", "0", "2"])
    row = record_to_csv_row(rec)
    assert record_from_csv_row(row) == rec
    assert record_from_json(json.dumps(rec)) == rec
    assert len(row) == len(CSV_COLUMNS)


def test_eval_requires_k_for_triangles(capsys):
    code, out, err = run_cli(capsys, "eval", "--family", "s2", "--n", "3")
    assert code == 2
    assert "requires --k" in err


def test_eval_known_values(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--family", "s2_ext", "--n", "2", "--k", "1",
        "--r", "1", "--lambda", "1/2",
    )
    assert code == 0
    assert json_lines(out)[0]["value"] == "5/2"

    code, out, _ = run_cli(
        capsys, "eval", "--family", "bell_ext", "--n", "2", "--r", "1",
        "--lambda", "1/2", "--x", "2",
    )
    assert code == 0
    rec = json_lines(out)[0]
    assert rec["value"] == "19/2" and rec["x"] == "2"


def test_eval_rejects_x_for_non_bell(capsys):
    code, _, err = run_cli(
        capsys, "eval", "--family", "s2", "--n", "3", "--k", "2", "--x", "1"
    )
    assert code == 2
    assert "--x" in err


def test_eval_symbolic_bell_at_x_stays_symbolic(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--family", "bell_deg", "--n", "2",
        "--lambda", "symbolic", "--x", "1/2",
    )
    # Bel_{2,lam}(1/2) = 3/4 - lam/2 stays a polynomial in lambda
    assert code == 0
    assert json_lines(out)[0]["value"] == ["3/4", "-1/2"]


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--family", "nope", "--n", "1")
    assert code == 2
    assert "nope" in err


def test_malformed_lambda(capsys):
    code, _, err = run_cli(
        capsys, "eval", "--family", "s2_deg", "--n", "2", "--k", "1",
        "--lambda", "0.5",
    )
    assert code == 2
    assert "0.5" in err


def test_grid_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("DEGEN_MAX_N", "5")
    code, _, err = run_cli(capsys, "table", "--family", "s2", "--n-max", "6")
    assert code == 2 and "DEGEN_MAX_N" in err
    code, _, _ = run_cli(capsys, "table", "--family", "s2", "--n-max", "5")
    assert code == 0
    code, _, err = run_cli(capsys, "verify", "--ids", "EQ12", "--n-max", "6")
    assert code == 2
    monkeypatch.setenv("DEGEN_MAX_N", "junk")
    code, _, err = run_cli(capsys, "table", "--family", "s2", "--n-max", "2")
    assert code == 2 and "DEGEN_MAX_N" in err


def test_verify_json_stream(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--ids", "EQ12,EQ13", "--n-max", "4", "--r", "1"
    )
    assert code == 0
    rows = json_lines(out)
    assert [row["identity"] for row in rows] == ["EQ12", "EQ13"]
    for row in rows:
        assert row["status"] == "pass"
        assert "elapsed_ms" not in row
        assert list(row) == ["identity", "grid", "checked", "failures", "status"]


def test_verify_csv_summary(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--ids", "THM2", "--n-max", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "identity,checked,failures,status"
    assert lines[1].startswith("THM2,") and lines[1].endswith(",pass")


def test_verify_unknown_identity(capsys):
    code, _, err = run_cli(capsys, "verify", "--ids", "THM99")
    assert code == 2
    assert "THM99" in err


def test_verify_bad_tol(capsys):
    code, _, err = run_cli(capsys, "verify", "--ids", "EQ12", "--tol", "0")
    assert code == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    real = verifier._CHECKERS[verifier.IdentityId.EQ12]

    def sabotaged(grid):
        desc, col = real(grid)
        col.failures.append(
            {"params": {"n": 0}, "left": "0", "right": "1"}
        )
        return desc, col

    monkeypatch.setitem(verifier._CHECKERS, verifier.IdentityId.EQ12, sabotaged)
    code, out, _ = run_cli(capsys, "verify", "--ids", "EQ12,EQ13", "--n-max", "3")
    assert code == 1
    rows = json_lines(out)
    assert rows[0]["status"] == "fail"
    assert rows[0]["failures"] == [{"params": {"n": 0}, "left": "0", "right": "1"}]
    assert rows[1]["status"] == "pass"


def test_identities_listing(capsys):
    code, out, _ = run_cli(capsys, "identities")
    assert code == 0
    rows = json_lines(out)
    assert len(rows) == 16
    assert rows[0]["id"] == "THM1" and rows[0]["location"] == "Theorem 1"
    numeric = {row["id"] for row in rows if row["numeric"]}
    assert numeric == {"EQ10", "EQ27"}


def test_series_dump(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--kind", "dlog", "--lambda", "1", "--order", "4"
    )
    assert code == 0
    data = json_lines(out)[0]
    assert data["coefficients"] == ["0", "1", "-1/2", "1/3", "-1/4"]


def test_families_constant():
    assert set(FAMILIES) == {
        "s1", "s2", "r_s2", "s2_deg", "s2_ext", "bell", "bell_deg", "bell_ext"
    }


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "degenbell", "eval", "--family", "s1",
         "--n", "4", "--k", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "11"
