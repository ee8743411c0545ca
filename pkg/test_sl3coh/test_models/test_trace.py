"""Test module for the `Trace` data model."""

from dcm_common.models.data_model import get_model_serialization_test

from sl3coh.models import Trace, TraceStep, Weight, ZERO


test_trace_step_json = get_model_serialization_test(
    TraceStep, (
        (("axiom", 0), {}),
        (
            ("E02", 1),
            {
                "lambda0": ZERO, "row": "g1/p=3/2/(0,0)",
                "family": "Hom(K|(1,1), (1,0))",
            },
        ),
        (
            ("E11", 1, 2),
            {"lambda0": Weight(1, 1), "errata": True, "note": "note"},
        ),
    )
)


test_trace_json = get_model_serialization_test(
    Trace, (
        ((), {}),
        (([TraceStep("axiom", 0)], ["warning"]), {}),
    )
)


def test_trace_step_skips_unset_fields():
    """Test that unset optional fields are not serialized."""
    assert "row" not in TraceStep("axiom", 0).json
    assert "lambda0" not in TraceStep("axiom", 0).json


def test_trace_extend_and_citations():
    """Test methods `Trace.extend` and `Trace.cited_rows`."""
    inner = Trace(
        [
            TraceStep("E02", 1, row="g1/p>3/2/(0,0)"),
            TraceStep("E11", 0, family="ext1/p>3/(0,0)/1", errata=True),
        ],
        ["inner"],
    )
    outer = Trace([TraceStep("E20", 1)])
    outer.extend(inner, depth=1)
    assert [step.depth for step in outer.steps] == [0, 1, 1]
    assert [step.depth for step in inner.steps] == [0, 0]
    assert outer.warnings == ["inner"]
    assert outer.cited_rows() == {"g1/p>3/2/(0,0)", "ext1/p>3/(0,0)/1"}
    assert outer.errata
    assert not Trace().errata
