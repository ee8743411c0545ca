"""Test module for the request data models."""

import pytest
from dcm_common.models.data_model import get_model_serialization_test

from sl3coh.models import (
    Weight, parse_weight_input, H2Request, TableRequest, CrosscheckRequest,
    LinkageRequest, Ext1Request, PatternsRequest,
)


test_h2_request_json = get_model_serialization_test(
    H2Request, (
        ((5, ["5,5"]), {}),
        ((3, ["1,1;0,1", "3,0"], 2, "both", True, True), {}),
    )
)

test_table_request_json = get_model_serialization_test(
    TableRequest, (
        ((5, 125), {}),
        ((2, 16, True, "table.csv"), {}),
    )
)

test_crosscheck_request_json = get_model_serialization_test(
    CrosscheckRequest, (
        (([5, 7],), {}),
        (([2, 3], 4, 3, 1, "report.json"), {}),
    )
)

test_linkage_request_json = get_model_serialization_test(
    LinkageRequest, (
        ((5, "3,3"), {}),
    )
)

test_ext1_request_json = get_model_serialization_test(
    Ext1Request, (
        ((5,), {"row": "1,0", "mu": "3,2"}),
        ((5,), {"scan": True, "max_len": 2}),
    )
)

test_patterns_request_json = get_model_serialization_test(
    PatternsRequest, (
        ((5,), {}),
        ((3, 4, False), {}),
    )
)


@pytest.mark.parametrize(
    ("text", "p", "twist", "expected"),
    [
        ("5,5", 5, 0, Weight(5, 5)),
        ("(5,5)", 5, 1, Weight(25, 25)),
        ("1,1;0,1", 3, 0, Weight(1, 4)),
        ("1,1;0,1", 3, 1, Weight(3, 12)),
        ("0,0;0,0;1,0", 5, 0, Weight(25, 0)),
        ("-2,1", 5, 0, Weight(-2, 1)),
    ],
    ids=["pair", "pair-twisted", "factors", "factors-twisted",
         "leading-zeros", "negative"],
)
def test_parse_weight_input(text, p, twist, expected):
    """Test function `parse_weight_input`."""
    assert parse_weight_input(text, p, twist) == expected


@pytest.mark.parametrize(
    ("text", "twist"),
    [
        ("3,0;0,0", 0),
        ("1,1;-1,0", 0),
        ("1;2", 0),
        ("1,1", -1),
        ("", 0),
    ],
    ids=["unrestricted-factor", "negative-factor", "malformed-factor",
         "negative-twist", "empty"],
)
def test_parse_weight_input_errors(text, twist):
    """Test function `parse_weight_input` for bad input."""
    with pytest.raises(ValueError):
        parse_weight_input(text, 3, twist)
