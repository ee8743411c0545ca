"""
Classification-related data-model definitions
"""

from typing import Optional
from dataclasses import dataclass, field

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight, Decomposition


@dataclass(frozen=True, order=True)
class PatternMatch(DataModel):
    """
    PatternMatch `DataModel`

    Keyword arguments:
    pattern_id -- identifier of the matched family
    r -- value of the free index (`None` for fixed families)
    d -- overall Frobenius twist on top of the instance
    dual -- whether the dualized family matched
    collapsed -- whether some factor of the instance read (0,0)
                 (default False)
    """

    pattern_id: int
    r: Optional[int]
    d: int
    dual: bool
    collapsed: bool = False


@dataclass
class Classification(DataModel):
    """
    Classification `DataModel`

    Keyword arguments:
    p -- characteristic
    weight -- classified weight
    matches -- all matched families
               (default [])
    """

    p: int
    weight: Weight
    matches: list[PatternMatch] = field(default_factory=list)

    @DataModel.serialization_handler("matches")
    @classmethod
    def matches_serialization(cls, value):
        """Performs `matches`-serialization."""
        return [match.json for match in value]

    @DataModel.deserialization_handler("matches")
    @classmethod
    def matches_deserialization(cls, value):
        """Performs `matches`-deserialization."""
        return [PatternMatch.from_json(match) for match in value]

    @property
    def value(self) -> int:
        """Returns 1 if any family matched, otherwise 0."""
        return 1 if self.matches else 0

    @property
    def pattern_ids(self) -> list[int]:
        """Returns sorted identifiers of matched families."""
        return sorted({match.pattern_id for match in self.matches})


@dataclass(frozen=True)
class InstantiatedPattern(DataModel):
    """
    InstantiatedPattern `DataModel`

    Keyword arguments:
    pattern_id -- identifier of the family
    r -- value of the free index (`None` for fixed families)
    dual -- whether the family was dualized
    collapsed -- whether some factor read (0,0)
    decomposition -- canonical decomposition of the instance
    """

    pattern_id: int
    r: Optional[int]
    dual: bool
    collapsed: bool
    decomposition: Decomposition

    @property
    def zero(self) -> bool:
        """Returns `True` if the instance collapsed to the zero weight."""
        return self.decomposition.is_zero
