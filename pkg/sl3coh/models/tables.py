"""
Table-data model definitions
"""

from typing import Optional
from dataclasses import dataclass, field

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight
from sl3coh.models.patterns import PairPattern, ValuePattern, FamilyPattern


REGIMES = ("p>3", "p=3", "p=2")


def regime_of(p: int) -> str:
    """Returns the prime regime of the tables for `p`."""
    if p > 3:
        return "p>3"
    if p == 3:
        return "p=3"
    if p == 2:
        return "p=2"
    raise ValueError(f"No table regime for p={p}.")


@dataclass(frozen=True)
class G1Row:
    """
    Entry of the G1-cohomology table.

    Keyword arguments:
    row_id -- identifier ('g1/<regime>/<degree>/<weight>')
    regime -- prime regime
    degree -- cohomological degree
    weight -- restricted weight pattern
    value -- module structure pattern (after untwisting)
    """

    row_id: str
    regime: str
    degree: int
    weight: PairPattern
    value: ValuePattern


@dataclass(frozen=True)
class Ext1Entry:
    """
    Family of the Ext1 table.

    Keyword arguments:
    regime -- prime regime
    row -- first argument of Ext1
    family -- family of second arguments
    errata -- identifier of the errata entry that rewrote this family
              (default None)
    """

    regime: str
    row: Weight
    family: FamilyPattern
    errata: Optional[str] = None


@dataclass(frozen=True)
class ErrataEntry(DataModel):
    """
    ErrataEntry `DataModel`

    Keyword arguments:
    entry_id -- identifier ('errata/<n>')
    regime -- prime regime of the affected table
    row -- affected Ext1 row
    old -- printed reading
    new -- corrected reading
    justification -- reason for the correction
    family_id -- identifier of the affected family
                 (default None)
    """

    entry_id: str
    regime: str
    row: Weight
    old: str
    new: str
    justification: str
    family_id: Optional[str] = None


@dataclass
class TableSet:
    """
    Collection of loaded tables.

    Keyword arguments:
    version -- table-data version
    errata_active -- whether the errata overlay has been applied
    g1 -- G1-cohomology rows
    ext1 -- Ext1 families
    families -- families of non-vanishing H2
    errata -- errata entries
    """

    version: str
    errata_active: bool
    g1: list[G1Row] = field(default_factory=list)
    ext1: list[Ext1Entry] = field(default_factory=list)
    families: list[FamilyPattern] = field(default_factory=list)
    errata: list[ErrataEntry] = field(default_factory=list)
