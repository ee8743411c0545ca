from .tables import TableLoader
from .g1_cohom import G1Cohomology
from .ext1 import Ext1Tables, ROWS
from .pipeline import H2Pipeline
from .classifier import H2Classifier
from .engine import Engine, ROUTES
from .crosscheck import CrossChecker, evaluate_row

__all__ = [
    "TableLoader",
    "G1Cohomology",
    "Ext1Tables", "ROWS",
    "H2Pipeline",
    "H2Classifier",
    "Engine", "ROUTES",
    "CrossChecker", "evaluate_row",
]
