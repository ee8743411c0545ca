"""
Cross-check report data-model definitions
"""

from dataclasses import dataclass, field

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight
from sl3coh.models.classification import InstantiatedPattern
from sl3coh.models.query_record import QueryRecord
from sl3coh.models.tables import ErrataEntry


def _weights_serialization(value):
    return [weight.json for weight in value]


def _weights_deserialization(value):
    return [Weight.from_json(weight) for weight in value]


@dataclass
class PatternFailure(DataModel):
    """
    PatternFailure `DataModel`; a family instance (twisted by `d`)
    whose pipeline dimension is not 1.

    Keyword arguments:
    instance -- the instantiated family
    d -- additional Frobenius twist
    weight -- recomposed weight
    h2_pipeline -- pipeline dimension
    """

    instance: InstantiatedPattern
    d: int
    weight: Weight
    h2_pipeline: int


@dataclass
class PrimeReport(DataModel):
    """
    PrimeReport `DataModel`

    Keyword arguments:
    p -- characteristic
    bound -- enumerated weights satisfy a, b < `bound`
    weights -- number of enumerated weights
    positive -- number of weights with non-zero pipeline dimension
    discrepancies -- records where the routes disagree
    pattern_failures -- family instances with pipeline dimension != 1
    multi_dimensional -- weights with pipeline dimension >= 2
    multiple_terms -- weights with more than one non-zero E2 term
    linkage_violations -- weights with non-zero pipeline dimension
                          which are not G-linked to (0,0)
    """

    p: int
    bound: int
    weights: int = 0
    positive: int = 0
    discrepancies: list[QueryRecord] = field(default_factory=list)
    pattern_failures: list[PatternFailure] = field(default_factory=list)
    multi_dimensional: list[Weight] = field(default_factory=list)
    multiple_terms: list[Weight] = field(default_factory=list)
    linkage_violations: list[Weight] = field(default_factory=list)

    @DataModel.serialization_handler("discrepancies")
    @classmethod
    def discrepancies_serialization(cls, value):
        """Performs `discrepancies`-serialization."""
        return [record.compact_json for record in value]

    @DataModel.deserialization_handler("discrepancies")
    @classmethod
    def discrepancies_deserialization(cls, value):
        """Performs `discrepancies`-deserialization."""
        return [QueryRecord.from_json(record) for record in value]

    @DataModel.serialization_handler("pattern_failures")
    @classmethod
    def pattern_failures_serialization(cls, value):
        """Performs `pattern_failures`-serialization."""
        return [failure.json for failure in value]

    @DataModel.deserialization_handler("pattern_failures")
    @classmethod
    def pattern_failures_deserialization(cls, value):
        """Performs `pattern_failures`-deserialization."""
        return [PatternFailure.from_json(failure) for failure in value]

    @DataModel.serialization_handler("multi_dimensional")
    @classmethod
    def multi_dimensional_serialization(cls, value):
        """Performs `multi_dimensional`-serialization."""
        return _weights_serialization(value)

    @DataModel.deserialization_handler("multi_dimensional")
    @classmethod
    def multi_dimensional_deserialization(cls, value):
        """Performs `multi_dimensional`-deserialization."""
        return _weights_deserialization(value)

    @DataModel.serialization_handler("multiple_terms")
    @classmethod
    def multiple_terms_serialization(cls, value):
        """Performs `multiple_terms`-serialization."""
        return _weights_serialization(value)

    @DataModel.deserialization_handler("multiple_terms")
    @classmethod
    def multiple_terms_deserialization(cls, value):
        """Performs `multiple_terms`-deserialization."""
        return _weights_deserialization(value)

    @DataModel.serialization_handler("linkage_violations")
    @classmethod
    def linkage_violations_serialization(cls, value):
        """Performs `linkage_violations`-serialization."""
        return _weights_serialization(value)

    @DataModel.deserialization_handler("linkage_violations")
    @classmethod
    def linkage_violations_deserialization(cls, value):
        """Performs `linkage_violations`-deserialization."""
        return _weights_deserialization(value)


@dataclass
class ErrataCitation(DataModel):
    """
    ErrataCitation `DataModel`

    Keyword arguments:
    entry -- the errata entry
    active -- whether the overlay was applied
    citations -- number of evaluated traces citing the affected family
    """

    entry: ErrataEntry
    active: bool
    citations: int = 0


@dataclass
class CrossCheckReport(DataModel):
    """
    CrossCheckReport `DataModel`

    Keyword arguments:
    metadata -- tool and table identification (no timestamps)
    primes -- per-prime reports
    errata -- citation counts per errata entry
    """

    metadata: dict
    primes: list[PrimeReport] = field(default_factory=list)
    errata: list[ErrataCitation] = field(default_factory=list)

    @DataModel.serialization_handler("metadata")
    @classmethod
    def metadata_serialization(cls, value):
        """Performs `metadata`-serialization."""
        return dict(value)

    @DataModel.deserialization_handler("metadata")
    @classmethod
    def metadata_deserialization(cls, value):
        """Performs `metadata`-deserialization."""
        return dict(value)

    @DataModel.serialization_handler("primes")
    @classmethod
    def primes_serialization(cls, value):
        """Performs `primes`-serialization."""
        return [report.json for report in value]

    @DataModel.deserialization_handler("primes")
    @classmethod
    def primes_deserialization(cls, value):
        """Performs `primes`-deserialization."""
        return [PrimeReport.from_json(report) for report in value]

    @DataModel.serialization_handler("errata")
    @classmethod
    def errata_serialization(cls, value):
        """Performs `errata`-serialization."""
        return [citation.json for citation in value]

    @DataModel.deserialization_handler("errata")
    @classmethod
    def errata_deserialization(cls, value):
        """Performs `errata`-deserialization."""
        return [ErrataCitation.from_json(citation) for citation in value]
