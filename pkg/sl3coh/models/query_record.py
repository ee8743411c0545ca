"""
QueryRecord data-model definition
"""

from typing import Optional
from dataclasses import dataclass

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight
from sl3coh.models.trace import Trace
from sl3coh.models.classification import PatternMatch


@dataclass
class QueryRecord(DataModel):
    """
    Record emitted by the command line interface. Only the fields
    relevant for `query` are set.

    Keyword arguments:
    query -- kind of query ('h2', 'linkage' or 'ext1')
    p -- characteristic
    weight -- queried weight
    twist -- twist of the canonical decomposition
    factors -- factors of the canonical decomposition
    route -- evaluated route(s) ('pipeline', 'theorem' or 'both')
    h2_pipeline -- dimension computed by the pipeline
    h2_theorem -- dimension decided by the family classifier
    agree -- whether both routes agree
    e2_02 -- dimension of E2^{02}
    e2_11 -- dimension of E2^{11}
    e2_20 -- dimension of E2^{20}
    pattern_ids -- identifiers of matched families
    matches -- matched families
    trace -- pipeline derivation
    warnings -- table-consistency warnings
    linked -- whether `weight` is G-linked to (0,0)
    g1_linked -- whether the residue of `weight` is G1-linked to (0,0)
    witnesses -- Weyl group elements witnessing linkage
    row -- first argument of an Ext1 query
    dim -- dimension of Ext1
    family -- source text of the matched Ext1 family
    family_id -- identifier of the matched Ext1 family
    index -- value of the free index of the matched Ext1 family
    errata -- whether a cited table row was rewritten by the errata
              overlay
    """

    query: str
    p: int
    weight: Optional[Weight] = None
    twist: Optional[int] = None
    factors: Optional[list[Weight]] = None
    route: Optional[str] = None
    h2_pipeline: Optional[int] = None
    h2_theorem: Optional[int] = None
    agree: Optional[bool] = None
    e2_02: Optional[int] = None
    e2_11: Optional[int] = None
    e2_20: Optional[int] = None
    pattern_ids: Optional[list[int]] = None
    matches: Optional[list[PatternMatch]] = None
    trace: Optional[Trace] = None
    warnings: Optional[list[str]] = None
    linked: Optional[bool] = None
    g1_linked: Optional[bool] = None
    witnesses: Optional[list[str]] = None
    row: Optional[Weight] = None
    dim: Optional[int] = None
    family: Optional[str] = None
    family_id: Optional[str] = None
    index: Optional[int] = None
    errata: Optional[bool] = None

    @DataModel.serialization_handler("weight")
    @classmethod
    def weight_serialization(cls, value):
        """Performs `weight`-serialization."""
        if value is None:
            DataModel.skip()
        return value.json

    @DataModel.deserialization_handler("weight")
    @classmethod
    def weight_deserialization(cls, value):
        """Performs `weight`-deserialization."""
        if value is None:
            DataModel.skip()
        return Weight.from_json(value)

    @DataModel.serialization_handler("row")
    @classmethod
    def row_serialization(cls, value):
        """Performs `row`-serialization."""
        if value is None:
            DataModel.skip()
        return value.json

    @DataModel.deserialization_handler("row")
    @classmethod
    def row_deserialization(cls, value):
        """Performs `row`-deserialization."""
        if value is None:
            DataModel.skip()
        return Weight.from_json(value)

    @DataModel.serialization_handler("factors")
    @classmethod
    def factors_serialization(cls, value):
        """Performs `factors`-serialization."""
        if value is None:
            DataModel.skip()
        return [factor.json for factor in value]

    @DataModel.deserialization_handler("factors")
    @classmethod
    def factors_deserialization(cls, value):
        """Performs `factors`-deserialization."""
        if value is None:
            DataModel.skip()
        return [Weight.from_json(factor) for factor in value]

    @DataModel.serialization_handler("matches")
    @classmethod
    def matches_serialization(cls, value):
        """Performs `matches`-serialization."""
        if value is None:
            DataModel.skip()
        return [match.json for match in value]

    @DataModel.deserialization_handler("matches")
    @classmethod
    def matches_deserialization(cls, value):
        """Performs `matches`-deserialization."""
        if value is None:
            DataModel.skip()
        return [PatternMatch.from_json(match) for match in value]

    @DataModel.serialization_handler("trace")
    @classmethod
    def trace_serialization(cls, value):
        """Performs `trace`-serialization."""
        if value is None:
            DataModel.skip()
        return value.json

    @DataModel.deserialization_handler("trace")
    @classmethod
    def trace_deserialization(cls, value):
        """Performs `trace`-deserialization."""
        if value is None:
            DataModel.skip()
        return Trace.from_json(value)

    @DataModel.serialization_handler("pattern_ids")
    @classmethod
    def pattern_ids_serialization(cls, value):
        """Performs `pattern_ids`-serialization."""
        if value is None:
            DataModel.skip()
        return list(value)

    @DataModel.serialization_handler("warnings")
    @classmethod
    def warnings_serialization(cls, value):
        """Performs `warnings`-serialization."""
        if value is None:
            DataModel.skip()
        return list(value)

    @DataModel.serialization_handler("witnesses")
    @classmethod
    def witnesses_serialization(cls, value):
        """Performs `witnesses`-serialization."""
        if value is None:
            DataModel.skip()
        return list(value)

    @property
    def compact_json(self) -> dict:
        """Returns `json` without unset fields."""
        return {k: v for k, v in self.json.items() if v is not None}
