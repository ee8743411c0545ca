"""
Request data-model definitions for the command line interface
"""

from typing import Optional
from dataclasses import dataclass

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight, Decomposition


def parse_weight_input(text: str, p: int, twist: int = 0) -> Weight:
    """
    Returns weight from command line syntax.

    Accepts a decimal pair 'a,b' or the factor syntax 'a0,b0;a1,b1;...'
    (factor at list position i is twisted i times). The result is
    twisted `twist` more times.

    Keyword arguments:
    text -- weight input
    p -- characteristic
    twist -- additional Frobenius twist
             (default 0)
    """
    if twist < 0:
        raise ValueError(f"Twist must be non-negative, got {twist}.")
    parts = text.split(";")
    if len(parts) == 1:
        weight = Weight.parse(parts[0])
    else:
        factors = [Weight.parse(part) for part in parts]
        for factor in factors:
            if not factor.restricted(p):
                raise ValueError(
                    f"Factor {factor} in '{text}' is not restricted for p={p}."
                )
        weight = Decomposition.from_digits(p, factors).weight()
    return weight.scaled(p**twist)


@dataclass
class H2Request(DataModel):
    """
    H2Request `DataModel`

    Keyword arguments:
    p -- characteristic
    weights -- weight inputs
    twist -- additional Frobenius twist for every input
             (default 0)
    route -- 'pipeline', 'theorem' or 'both'
             (default 'pipeline')
    explain -- whether to attach the pipeline trace
               (default False)
    strict -- whether disagreement of routes is an error
              (default False)
    """

    p: int
    weights: list[str]
    twist: int = 0
    route: str = "pipeline"
    explain: bool = False
    strict: bool = False


@dataclass
class TableRequest(DataModel):
    """
    TableRequest `DataModel`

    Keyword arguments:
    p -- characteristic
    bound -- tabulate all a, b < `bound`
    discrepancies_only -- whether to emit only disagreeing rows
                          (default False)
    output -- output path (standard output if `None`)
              (default None)
    """

    p: int
    bound: int
    discrepancies_only: bool = False
    output: Optional[str] = None


@dataclass
class CrosscheckRequest(DataModel):
    """
    CrosscheckRequest `DataModel`

    Keyword arguments:
    primes -- characteristics
    max_len -- enumerate all a, b < p^`max_len`
               (default 3)
    max_r -- largest free index of instantiated families
             (default 4)
    max_d -- largest extra twist of instantiated families
             (default 2)
    output -- output path (standard output if `None`)
              (default None)
    """

    primes: list[int]
    max_len: int = 3
    max_r: int = 4
    max_d: int = 2
    output: Optional[str] = None


@dataclass
class LinkageRequest(DataModel):
    """
    LinkageRequest `DataModel`

    Keyword arguments:
    p -- characteristic
    weight -- weight input
    """

    p: int
    weight: str


@dataclass
class Ext1Request(DataModel):
    """
    Ext1Request `DataModel`

    Keyword arguments:
    p -- characteristic
    row -- first argument (required unless `scan`)
           (default None)
    mu -- weight input for the second argument (required unless `scan`)
          (default None)
    twist -- additional Frobenius twist for `mu`
             (default 0)
    scan -- whether to scan all second arguments with at most
            `max_len` digits instead
            (default False)
    max_len -- number of base-p digits scanned
               (default 4)
    """

    p: int
    row: Optional[str] = None
    mu: Optional[str] = None
    twist: int = 0
    scan: bool = False
    max_len: int = 4


@dataclass
class PatternsRequest(DataModel):
    """
    PatternsRequest `DataModel`

    Keyword arguments:
    p -- characteristic
    max_r -- largest free index
             (default 1)
    include_zero -- whether to list instances collapsing to (0,0)
                    (default True)
    """

    p: int
    max_r: int = 1
    include_zero: bool = True
