"""
Test module for the `CrossChecker` component.
"""

import json
from collections import Counter

import pytest
from dcm_common import LoggingContext as Context

from sl3coh.models import Weight
from sl3coh.components import CrossChecker, evaluate_row


@pytest.fixture(name="checker")
def _checker(engine):
    return CrossChecker(engine)


def test_evaluate_row(engine):
    """Test function `evaluate_row`."""
    records, citations = evaluate_row(engine, 3, 1, 5)
    assert [r.weight for r in records] == [Weight(1, b) for b in range(5)]
    disagreeing = [r for r in records if not r.agree]
    assert [r.weight for r in disagreeing] == [Weight(1, 4)]
    assert disagreeing[0].trace is not None
    assert all(r.trace is None for r in records if r.agree)
    assert isinstance(citations, Counter)
    # lam0 = (1,1) for b = 1 and b = 4
    assert citations["g1/p=3/1/(1,1)"] == 2


def test_enumerate(checker):
    """Test method `CrossChecker.enumerate`."""
    records = list(checker.enumerate(7, 1))
    assert len(records) == 1
    assert records[0].weight == Weight(0, 0)
    assert records[0].h2_pipeline == 0
    assert [r.weight for r in checker.enumerate(5, 3)] \
        == [Weight(a, b) for a in range(3) for b in range(3)]


def test_enumerate_errors(checker):
    """Test that `CrossChecker.enumerate` validates eagerly."""
    with pytest.raises(ValueError):
        checker.enumerate(4, 3)
    with pytest.raises(ValueError):
        checker.enumerate(5, 0)
    with pytest.raises(ValueError):
        CrossChecker(checker.engine).enumerate(2, 2**65)


def test_enumerate_workers(engine):
    """Test that parallel enumeration preserves order and results."""
    serial = [r.json for r in CrossChecker(engine).enumerate(3, 9)]
    parallel = [r.json for r in CrossChecker(engine, workers=2).enumerate(3, 9)]
    assert parallel == serial


@pytest.mark.parametrize(
    ("p", "bound", "golden"),
    [(2, 16, "crosscheck_p2.json"), (3, 81, "crosscheck_p3.json")],
    ids=["p2", "p3"],
)
def test_prime_report_small_primes(checker, fixtures, p, bound, golden):
    """Test discrepancies for small primes against the golden snapshot."""
    report = checker.prime_report(p, bound, 1, 0)
    assert report.weights == bound**2
    assert [r.weight.json for r in report.discrepancies] == json.loads(
        (fixtures / golden).read_text(encoding="utf-8")
    )
    for record in report.discrepancies:
        assert record.h2_pipeline == 0
        assert record.h2_theorem == 1
        assert record.trace is not None
    assert Context.WARNING in checker.log


def test_prime_report_p3_family_3(checker):
    """Test that the p = 3 discrepancies are instances of family 3."""
    report = checker.prime_report(3, 27, 1, 0)
    assert all(r.pattern_ids == [3] for r in report.discrepancies)


def test_prime_report_p2_linkage(checker):
    """Test that non-linked weights with non-zero H^2 are reported."""
    report = checker.prime_report(2, 4, 1, 0)
    assert Weight(1, 2) in report.linkage_violations
    assert Weight(2, 1) in report.linkage_violations


@pytest.mark.parametrize("p", [5, 7], ids=lambda p: f"p={p}")
def test_prime_report_large_primes(checker, p):
    """Test that both routes agree for p >= 5."""
    report = checker.prime_report(p, p**2, 1, 0)
    assert report.discrepancies == []
    assert report.multi_dimensional == []
    assert report.multiple_terms == []
    assert report.linkage_violations == []
    assert report.positive > 0


@pytest.mark.parametrize("p", [5, 7], ids=lambda p: f"p={p}")
def test_pattern_failures(checker, p):
    """Test that every family instance has one-dimensional H^2."""
    assert checker.pattern_failures(p, 4, 2) == []


def test_pattern_failures_skip_zero_instances(checker):
    """Test that instances collapsing to (0,0) are not evaluated."""
    failures = checker.pattern_failures(2, 1, 0)
    assert all(not f.instance.zero for f in failures)


@pytest.mark.parametrize("p", [5, 7], ids=lambda p: f"p={p}")
def test_route_agreement(checker, p):
    """Test that both routes agree on all a, b < p^3."""
    disagreeing = [
        r.weight for r in checker.enumerate(p, p**3) if not r.agree
    ]
    assert disagreeing == []


def test_report(checker):
    """Test method `CrossChecker.report`."""
    report = checker.report([3], 2, 1, 0, metadata={"version": "test"})
    assert report.metadata == {
        "version": "test", "tables": "1.0.0", "errata": True,
        "primes": [3], "max_len": 2, "max_r": 1, "max_d": 0,
    }
    assert [r.p for r in report.primes] == [3]
    assert [r.weight for r in report.primes[0].discrepancies] \
        == [Weight(1, 4), Weight(4, 1)]
    assert [c.entry.entry_id for c in report.errata] \
        == ["errata/1", "errata/2", "errata/3"]
    # the p = 3 row (1,1) is never reached by the pipeline
    assert all(c.citations == 0 for c in report.errata)
    assert all(c.active for c in report.errata)


def test_report_is_deterministic(engine):
    """Test that repeated reports serialize identically."""
    first = CrossChecker(engine).report([2, 3], 2, 2, 1)
    second = CrossChecker(engine).report([2, 3], 2, 2, 1)
    assert json.dumps(first.json, sort_keys=True) \
        == json.dumps(second.json, sort_keys=True)
