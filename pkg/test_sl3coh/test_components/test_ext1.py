"""
Test module for the `Ext1Tables` component.
"""

import json

import pytest
from dcm_common import LoggingContext as Context

from sl3coh.models import Weight, Decomposition, REGIMES
from sl3coh.weight_lattice import steinberg_decompose


@pytest.mark.parametrize(
    ("p", "row", "mu", "dim", "family_id", "index"),
    [
        (5, Weight(1, 0), Weight(3, 2), 1, "ext1/p>3/(1,0)/1", None),
        (5, Weight(0, 0), Weight(0, 0), 0, None, None),
        (5, Weight(0, 0), Weight(3, 3), 1, "ext1/p>3/(0,0)/1", 0),
        (5, Weight(0, 0), Weight(75, 75), 1, "ext1/p>3/(0,0)/1", 2),
        (5, Weight(0, 0), Weight(6, 3), 1, "ext1/p>3/(0,0)/2", 0),
        (5, Weight(0, 0), Weight(3, 6), 1, "ext1/p>3/(0,0)/3", 0),
        (5, Weight(1, 1), Weight(2, 2), 1, "ext1/p>3/(1,1)/1", None),
        (5, Weight(1, 0), Weight(16, 15), 1, "ext1/p>3/(1,0)/4", 0),
        (5, Weight(0, 1), Weight(3, 2), 0, None, None),
        (7, Weight(0, 1), Weight(4, 5), 1, "ext1/p>3/(0,1)/1", None),
        (3, Weight(0, 0), Weight(1, 1), 1, "ext1/p=3/(0,0)/1", 0),
        (3, Weight(1, 1), Weight(0, 0), 1, "ext1/p=3/(1,1)/1", None),
        (2, Weight(1, 0), Weight(1, 2), 1, "ext1/p=2/(1,0)/1", None),
        (2, Weight(0, 0), Weight(0, 0), 0, None, None),
    ],
    ids=["p5-(1,0)-restricted", "p5-trivial", "p5-(0,0)-i0", "p5-(0,0)-i2",
         "p5-(0,0)-tensor", "p5-(0,0)-tensor-dual", "p5-(1,1)",
         "p5-(1,0)-twisted", "p5-(0,1)-miss", "p7-(0,1)", "p3-(0,0)",
         "p3-(1,1)-trivial", "p2-(1,0)", "p2-trivial"],
)
def test_ext1_dim(engine, p, row, mu, dim, family_id, index):
    """Test method `Ext1Tables.ext1_dim`."""
    result = engine.ext1.ext1_dim(p, row, steinberg_decompose(p, mu))
    assert result.dim == dim
    assert result.family_id == family_id
    assert result.index == index
    assert not result.errata


def test_ext1_dim_errors(engine):
    """Test method `Ext1Tables.ext1_dim` for bad input."""
    with pytest.raises(ValueError):
        engine.ext1.ext1_dim(5, Weight(2, 0), Decomposition.zero(5))
    with pytest.raises(ValueError):
        engine.ext1.ext1_dim(5, Weight(0, 0), Decomposition.zero(7))
    with pytest.raises(ValueError):
        engine.ext1.ext1_dim(6, Weight(0, 0), Decomposition.zero(6))


def test_h1_g(engine):
    """Test method `Ext1Tables.h1_g`."""
    assert engine.ext1.h1_g(5, steinberg_decompose(5, Weight(3, 3))) == 1
    assert engine.ext1.h1_g(5, steinberg_decompose(5, Weight(1, 1))) == 0


def test_ext1_errata(engine, engine_no_errata):
    """Test that the errata overlay decides Ext1 at a rewritten family."""
    mu = steinberg_decompose(3, Weight(4, 1))
    result = engine.ext1.ext1_dim(3, Weight(1, 1), mu)
    assert result.dim == 1
    assert result.errata
    assert result.family_id == "ext1/p=3/(1,1)/2"
    assert engine_no_errata.ext1.ext1_dim(3, Weight(1, 1), mu).dim == 0


@pytest.mark.parametrize("regime", REGIMES)
def test_dual_closure(engine, regime):
    """Test that the Ext1 table is closed under dualization."""
    assert engine.ext1.dual_closure_defects(regime) == []


def test_dual_closure_without_errata(engine_no_errata):
    """Test dual-closure defects of the Ext1 table as printed."""
    assert engine_no_errata.ext1.dual_closure_defects("p=3") \
        == ["ext1/p=3/(1,1)/3"]
    assert engine_no_errata.ext1.dual_closure_defects("p>3") == []
    with pytest.raises(ValueError):
        engine_no_errata.ext1.dual_closure_defects("p=5")


@pytest.mark.parametrize(
    ("p", "max_len"),
    [(2, 4), (3, 3), (5, 3), (7, 2)],
    ids=["p2", "p3", "p5", "p7"],
)
def test_scan(engine, p, max_len):
    """Test uniqueness and dual symmetry of the Ext1 families."""
    assert engine.ext1.scan(p, max_len) == {"multiple": [], "asymmetric": []}
    assert Context.WARNING not in engine.ext1.log


def test_scan_without_errata(engine_no_errata):
    """Test that the scan detects the missing family of the printed table."""
    result = engine_no_errata.ext1.scan(3, 2)
    assert result["multiple"] == []
    assert {"row": "(1,1)", "mu": "(1,1) x (0,1)^[1]"} \
        in result["asymmetric"]


def test_scan_p5_length_4(engine):
    """Test uniqueness and dual symmetry for all factor lengths <= 4."""
    assert engine.ext1.scan(5, 4) == {"multiple": [], "asymmetric": []}


def test_generic_regime_at_p5(engine, fixtures):
    """
    Test the generic regime instantiated at p = 5 against families
    substituted by hand.
    """
    golden = json.loads(
        (fixtures / "ext1_p5.json").read_text(encoding="utf-8")
    )
    entries = {
        entry.family.family_id: entry
        for entry in engine.tables.ext1 if entry.regime == "p>3"
    }
    assert sorted({item["family_id"] for item in golden}) == sorted(entries)
    for item in golden:
        entry = entries[item["family_id"]]
        instance = entry.family.instantiate(5, item["i"])
        assert instance.decomposition.weight().json == item["weight"], \
            item["family_id"]
        assert not instance.collapsed
        result = engine.ext1.ext1_dim(5, entry.row, instance.decomposition)
        assert result.dim == 1
        assert result.family_id == item["family_id"]
        assert result.index == item["i"]
