"""
PipelineResult data-model definition
"""

from dataclasses import dataclass, field

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight
from sl3coh.models.trace import Trace


@dataclass
class TermResult(DataModel):
    """
    Result of a single E2-term evaluation.

    Keyword arguments:
    value -- dimension of the term
    trace -- derivation of the value
    """

    value: int
    trace: Trace = field(default_factory=Trace)


@dataclass
class PipelineResult(DataModel):
    """
    PipelineResult `DataModel`

    Keyword arguments:
    p -- characteristic
    weight -- highest weight of the coefficient module
    e2_02 -- dimension of E2^{02}
    e2_11 -- dimension of E2^{11}
    e2_20 -- dimension of E2^{20}
    trace -- derivation of the three terms
    """

    p: int
    weight: Weight
    e2_02: int = 0
    e2_11: int = 0
    e2_20: int = 0
    trace: Trace = field(default_factory=Trace)

    @property
    def total(self) -> int:
        """Returns dimension of H^2(G, V)."""
        return self.e2_02 + self.e2_11 + self.e2_20

    @property
    def terms(self) -> tuple[int, int, int]:
        """Returns the three term dimensions."""
        return (self.e2_02, self.e2_11, self.e2_20)
