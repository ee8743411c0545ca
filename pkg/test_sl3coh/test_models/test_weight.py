"""Test module for the `Weight` and `Decomposition` data models."""

import pytest
from dcm_common.models.data_model import get_model_serialization_test

from sl3coh.models import Weight, Decomposition, ZERO


test_weight_json = get_model_serialization_test(
    Weight, (
        ((0, 0), {}),
        ((), {"a": 3, "b": 12}),
    )
)


test_decomposition_json = get_model_serialization_test(
    Decomposition, (
        ((5, 0, (ZERO,)), {}),
        ((5, 1, (Weight(1, 1),)), {}),
        ((3, 0, (Weight(1, 1), Weight(0, 0), Weight(0, 1))), {}),
    )
)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("3,5", Weight(3, 5)),
        ("(3, 5)", Weight(3, 5)),
        (" 0,0 ", ZERO),
        ("-2,1", Weight(-2, 1)),
        ("3", None),
        ("a,b", None),
        ("1,2,3", None),
    ],
    ids=["plain", "parentheses", "whitespace", "negative", "single",
         "letters", "triple"],
)
def test_weight_parse(text, expected):
    """Test method `Weight.parse`."""
    if expected is None:
        with pytest.raises(ValueError):
            Weight.parse(text)
    else:
        assert Weight.parse(text) == expected


def test_weight_arithmetic():
    """Test arithmetic of `Weight`."""
    assert Weight(1, 2) + Weight(3, 4) == Weight(4, 6)
    assert Weight(1, 2) - Weight(3, 4) == Weight(-2, -2)
    assert Weight(1, 2).scaled(3) == Weight(3, 6)
    assert Weight(1, 2).dual() == Weight(2, 1)
    assert str(Weight(1, 2)) == "(1,2)"
    assert Weight(0, 4).dominant and not Weight(0, -4).dominant
    assert Weight(2, 2).restricted(3) and not Weight(3, 2).restricted(3)


def test_decomposition_from_digits():
    """Test method `Decomposition.from_digits`."""
    assert Decomposition.from_digits(
        5, [ZERO, Weight(1, 1), ZERO]
    ) == Decomposition(5, 1, (Weight(1, 1),))
    assert Decomposition.from_digits(5, [ZERO, ZERO]).is_zero
    assert Decomposition.from_digits(
        5, [Weight(2, 0)], twist=2
    ) == Decomposition(5, 2, (Weight(2, 0),))
    with pytest.raises(ValueError):
        Decomposition.from_digits(5, [Weight(5, 0)])


def test_decomposition_parts():
    """Test `lambda0`, `remainder` and `digits` of `Decomposition`."""
    dec = Decomposition(5, 0, (Weight(2, 0), ZERO, Weight(0, 1)))
    assert dec.lambda0 == Weight(2, 0)
    assert dec.remainder() == Decomposition(5, 1, (Weight(0, 1),))
    assert dec.remainder().lambda0 == ZERO
    assert dec.remainder().remainder() == Decomposition(5, 0, (Weight(0, 1),))
    assert dec.weight() == Weight(2, 25)
    twisted = dec.twisted(1)
    assert twisted.digits == (ZERO, Weight(2, 0), ZERO, Weight(0, 1))
    assert Decomposition.zero(5).twisted(3).is_zero
    assert Decomposition(5, 0, (Weight(4, 0),)).remainder().is_zero


@pytest.mark.parametrize(
    ("dec", "text"),
    [
        (Decomposition.zero(3), "(0,0)"),
        (Decomposition(5, 1, (Weight(1, 1),)), "(1,1)^[1]"),
        (
            Decomposition(5, 0, (Weight(2, 3), Weight(1, 0))),
            "(2,3) x (1,0)^[1]",
        ),
        (
            Decomposition(3, 0, (Weight(0, 1), ZERO, Weight(1, 0))),
            "(0,1) x (1,0)^[2]",
        ),
    ],
    ids=["zero", "twisted", "two-factors", "inner-zero"],
)
def test_decomposition_str(dec, text):
    """Test string representation of `Decomposition`."""
    assert str(dec) == text
