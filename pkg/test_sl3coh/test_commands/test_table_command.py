"""
Test module for the `TableCommand`.
"""

import csv
import json

from sl3coh.commands import COLUMNS


def test_table_single_row(cli):
    """Test command 'table' for the trivial grid."""
    status, stdout = cli("table", "--p", "7", "--max", "1")
    assert status == 0
    assert stdout.splitlines() == [
        ",".join(COLUMNS),
        "0,0,0,0,true,,0,0,0",
    ]


def test_table_grid(cli):
    """Test that rows cover the grid in lexicographic order."""
    status, stdout = cli("table", "--p", "5", "--max", "6")
    assert status == 0
    rows = list(csv.DictReader(stdout.splitlines()))
    assert [(int(r["a"]), int(r["b"])) for r in rows] \
        == [(a, b) for a in range(6) for b in range(6)]
    assert all(r["agree"] == "true" for r in rows)
    row = rows[-1]
    assert row["h2_pipeline"] == "1"
    assert row["pattern_ids"] == "1"
    assert row["e2_02"] == "1"


def test_table_discrepancies_only(cli, fixtures, tmp_path):
    """Test '--discrepancies-only' and '--output'."""
    output = tmp_path / "table.csv"
    status, stdout = cli(
        "table", "--p", "2", "--max", "16", "--discrepancies-only",
        "--output", str(output),
    )
    assert status == 0
    assert stdout == ""
    rows = list(
        csv.DictReader(output.read_text(encoding="utf-8").splitlines())
    )
    assert [{"a": int(r["a"]), "b": int(r["b"])} for r in rows] \
        == json.loads(
            (fixtures / "crosscheck_p2.json").read_text(encoding="utf-8")
        )
    assert all(r["agree"] == "false" for r in rows)


def test_table_bad_bound(cli):
    """Test exit status for a non-positive bound."""
    assert cli("table", "--p", "5", "--max", "0")[0] == 1


def test_table_errata_flag(cli):
    """Test that '--errata off' leaves the p = 3 table unchanged."""
    argv = ("table", "--p", "3", "--max", "81")
    status_on, stdout_on = cli("--errata", "on", *argv)
    status_off, stdout_off = cli("--errata", "off", *argv)
    assert status_on == status_off == 0
    assert stdout_on == stdout_off
