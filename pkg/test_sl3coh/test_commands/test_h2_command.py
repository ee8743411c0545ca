"""
Test module for the `H2Command`.
"""

import json

import pytest


@pytest.mark.parametrize(
    ("argv", "expected"),
    [
        (
            ("--p", "5", "--weight", "5,5", "--route", "both"),
            {"h2_pipeline": 1, "h2_theorem": 1, "agree": True,
             "pattern_ids": [1]},
        ),
        (
            ("--p", "5", "--weight", "0,0"),
            {"h2_pipeline": 0, "route": "pipeline"},
        ),
        (
            ("--p", "5", "--weight", "13,16", "--route", "theorem"),
            {"h2_theorem": 1, "pattern_ids": [3]},
        ),
        (
            ("--p", "5", "--weight", "1,1", "--twist", "1"),
            {"h2_pipeline": 1, "weight": {"a": 5, "b": 5}, "twist": 1},
        ),
        (
            ("--p", "5", "--weight", "3,1;2,3"),
            {"h2_pipeline": 1, "weight": {"a": 13, "b": 16}},
        ),
    ],
    ids=["both", "default-route", "theorem", "twist", "factors"],
)
def test_h2(cli, argv, expected):
    """Test command 'h2' for single weights."""
    status, stdout = cli("h2", *argv)
    assert status == 0
    record = json.loads(stdout)
    assert record["query"] == "h2"
    for key, value in expected.items():
        assert record[key] == value


def test_h2_route_scoping(cli):
    """Test that only fields of the evaluated routes are emitted."""
    pipeline = json.loads(cli("h2", "--p", "5", "--weight", "5,5")[1])
    assert "h2_theorem" not in pipeline
    assert "agree" not in pipeline
    theorem = json.loads(
        cli("h2", "--p", "5", "--weight", "5,5", "--route", "theorem")[1]
    )
    assert "h2_pipeline" not in theorem
    assert "trace" not in theorem


def test_h2_multiple_weights(cli):
    """Test that every '--weight' yields one JSON line."""
    status, stdout = cli(
        "h2", "--p", "7", "--weight", "0,0", "--weight", "7,7"
    )
    assert status == 0
    lines = stdout.splitlines()
    assert len(lines) == 2
    assert [json.loads(line)["h2_pipeline"] for line in lines] == [0, 1]


def test_h2_explain(cli):
    """Test that '--explain' attaches the derivation."""
    status, stdout = cli(
        "h2", "--p", "3", "--weight", "3,0", "--route", "both", "--explain"
    )
    assert status == 0
    record = json.loads(stdout)
    assert record["agree"]
    rows = [step.get("row") for step in record["trace"]["steps"]]
    assert "g1/p=3/2/(0,0)" in rows


def test_h2_strict(cli):
    """Test exit status of '--strict' if the routes disagree."""
    argv = ("h2", "--p", "3", "--weight", "1,4", "--route", "both")
    status, stdout = cli(*argv)
    assert status == 0
    record = json.loads(stdout)
    assert record["h2_pipeline"] == 0
    assert record["h2_theorem"] == 1
    assert record["agree"] is False
    status, stdout = cli(*argv, "--strict")
    assert status == 2
    assert json.loads(stdout)["agree"] is False
    assert cli("h2", "--p", "5", "--weight", "5,5", "--route", "both",
               "--strict")[0] == 0


def test_h2_bad_route(cli, capsys):
    """Test that unknown routes are rejected."""
    status, _ = cli("h2", "--p", "5", "--weight", "0,0", "--route", "other")
    assert status == 1
    assert "invalid choice" in capsys.readouterr().err
