"""
Ext1Result data-model definition
"""

from typing import Optional
from dataclasses import dataclass

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight, Decomposition


@dataclass(frozen=True)
class Ext1Result(DataModel):
    """
    Ext1Result `DataModel`

    Keyword arguments:
    row -- first argument of Ext1 (one of the supported rows)
    mu -- canonical decomposition of the second argument
    dim -- dimension (0 or 1)
           (default 0)
    family -- source text of the matched family
              (default None)
    family_id -- identifier of the matched family
                 (default None)
    index -- value of the free index i of the matched family
             (default None)
    errata -- whether the matched family was rewritten by the errata
              overlay
              (default False)
    """

    row: Weight
    mu: Decomposition
    dim: int = 0
    family: Optional[str] = None
    family_id: Optional[str] = None
    index: Optional[int] = None
    errata: bool = False
