"""
Test module for the `Ext1Command`.
"""

import json

import pytest


@pytest.mark.parametrize(
    ("argv", "dim", "family_id"),
    [
        (("--row", "1,0", "--mu", "3,2"), 1, "ext1/p>3/(1,0)/1"),
        (("--row", "0,0", "--mu", "0,0"), 0, None),
        (("--row", "0,0", "--mu", "3,3", "--twist", "1"), 1,
         "ext1/p>3/(0,0)/1"),
        (("--row", "0,0", "--mu", "1,3;1,0"), 1, "ext1/p>3/(0,0)/2"),
    ],
    ids=["restricted", "trivial", "twist", "factors"],
)
def test_ext1(cli, argv, dim, family_id):
    """Test command 'ext1' for single queries."""
    status, stdout = cli("ext1", "--p", "5", *argv)
    assert status == 0
    record = json.loads(stdout)
    assert record["query"] == "ext1"
    assert record["dim"] == dim
    assert record.get("family_id") == family_id


@pytest.mark.parametrize(
    "argv",
    [
        ("--row", "2,0", "--mu", "0,0"),
        ("--row", "0,0"),
        ("--mu", "0,0"),
    ],
    ids=["unsupported-row", "missing-mu", "missing-row"],
)
def test_ext1_errors(cli, capsys, argv):
    """Test exit status for incomplete or unsupported queries."""
    status, stdout = cli("ext1", "--p", "5", *argv)
    assert status == 1
    assert stdout == ""
    assert "sl3coh: error:" in capsys.readouterr().err


def test_ext1_scan(cli):
    """Test command 'ext1' with '--scan'."""
    status, stdout = cli("ext1", "--p", "5", "--scan", "--max-len", "2")
    assert status == 0
    assert json.loads(stdout) == {
        "p": 5, "max_len": 2, "multiple": [], "asymmetric": [],
        "dual_closure_defects": [],
    }


def test_ext1_scan_without_errata(cli):
    """Test that the scan reports defects of the printed tables."""
    status, stdout = cli(
        "--errata", "off", "ext1", "--p", "3", "--scan", "--max-len", "2"
    )
    assert status == 0
    result = json.loads(stdout)
    assert result["dual_closure_defects"] == ["ext1/p=3/(1,1)/3"]
    assert {"row": "(1,1)", "mu": "(1,1) x (0,1)^[1]"} in result["asymmetric"]
