from .weight import Weight, Decomposition, ZERO
from .module_expr import ModuleExpr, dualize, head, hom_to_simple
from .trace import TraceStep, Trace
from .pipeline_result import TermResult, PipelineResult
from .classification import PatternMatch, Classification, InstantiatedPattern
from .ext1_result import Ext1Result
from .patterns import (
    CoordToken, PairPattern, Exponent, FactorPattern, FamilyPattern,
    PatternInstance, LabelPattern, ValuePattern,
)
from .tables import (
    REGIMES, regime_of, G1Row, Ext1Entry, ErrataEntry, TableSet,
)
from .query_record import QueryRecord
from .report import (
    PatternFailure, PrimeReport, ErrataCitation, CrossCheckReport,
)
from .requests import (
    parse_weight_input, H2Request, TableRequest, CrosscheckRequest,
    LinkageRequest, Ext1Request, PatternsRequest,
)

__all__ = [
    "Weight", "Decomposition", "ZERO",
    "ModuleExpr", "dualize", "head", "hom_to_simple",
    "TraceStep", "Trace", "TermResult", "PipelineResult",
    "PatternMatch", "Classification", "InstantiatedPattern",
    "Ext1Result",
    "CoordToken", "PairPattern", "Exponent", "FactorPattern",
    "FamilyPattern", "PatternInstance", "LabelPattern", "ValuePattern",
    "REGIMES", "regime_of", "G1Row", "Ext1Entry", "ErrataEntry", "TableSet",
    "QueryRecord",
    "PatternFailure", "PrimeReport", "ErrataCitation", "CrossCheckReport",
    "parse_weight_input", "H2Request", "TableRequest", "CrosscheckRequest",
    "LinkageRequest", "Ext1Request", "PatternsRequest",
]
