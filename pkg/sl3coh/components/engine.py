"""
This module defines the `Engine` component.
"""

from pathlib import Path

from dcm_common import Logger

from sl3coh.models import Weight, QueryRecord, TableSet
from sl3coh.weight_lattice import (
    check_prime, check_dominant, check_guard, steinberg_decompose,
)
from sl3coh.weyl_linkage import (
    linkage_witnesses, g1_linked_residue,
)
from sl3coh.components.tables import TableLoader
from sl3coh.components.g1_cohom import G1Cohomology
from sl3coh.components.ext1 import Ext1Tables
from sl3coh.components.pipeline import H2Pipeline
from sl3coh.components.classifier import H2Classifier


ROUTES = ("pipeline", "theorem", "both")


class Engine:
    """
    An `Engine` assembles table loading, both H^2-routes and the Ext1
    tables, and answers single queries as `QueryRecord`s.

    Keyword arguments:
    data_dir -- directory of the table data
    errata -- whether to apply the errata overlay
              (default True)
    max_digits -- guard for the number of base-p digits
                  (default 64)
    """
    TAG: str = "Engine"

    def __init__(
        self, data_dir: Path, errata: bool = True, max_digits: int = 64
    ) -> None:
        self.log = Logger(default_origin=self.TAG)
        self.max_digits = max_digits
        self.loader = TableLoader(data_dir, errata)
        self.tables: TableSet = self.loader.load()
        self.log.merge(self.loader.log)
        self.g1 = G1Cohomology(self.tables)
        self.ext1 = Ext1Tables(self.tables)
        self.pipeline = H2Pipeline(self.g1, self.ext1, max_digits)
        self.classifier = H2Classifier(self.tables.families, max_digits)

    def check(self, p: int, w: Weight) -> None:
        """
        Raises `ValueError` unless `p` is prime and `w` is dominant
        within the guard.
        """
        check_prime(p)
        check_dominant(w)
        check_guard(p, w, self.max_digits)

    def h2_query(
        self, p: int, w: Weight, route: str = "both", explain: bool = False
    ) -> QueryRecord:
        """
        Returns `QueryRecord` for H^2(G, L(`w`)).

        Keyword arguments:
        p -- characteristic
        w -- dominant weight
        route -- 'pipeline', 'theorem' or 'both'
                 (default 'both')
        explain -- whether to attach the pipeline trace
                   (default False)
        """
        if route not in ROUTES:
            raise ValueError(
                f"Unknown route '{route}' (expected one of "
                + f"{', '.join(ROUTES)})."
            )
        self.check(p, w)
        dec = steinberg_decompose(p, w)
        record = QueryRecord(
            "h2", p, weight=w, twist=dec.twist, factors=list(dec.factors),
            route=route,
        )
        if route in ("pipeline", "both"):
            result = self.pipeline.evaluate(dec)
            record.h2_pipeline = result.total
            record.e2_02, record.e2_11, record.e2_20 = result.terms
            record.warnings = list(result.trace.warnings)
            record.errata = result.trace.errata
            if explain:
                record.trace = result.trace
        if route in ("theorem", "both"):
            classification = self.classifier.classify_decomposition(dec)
            record.h2_theorem = classification.value
            record.pattern_ids = classification.pattern_ids
            record.matches = classification.matches
        if route == "both":
            record.agree = record.h2_pipeline == record.h2_theorem
        return record

    def linkage_query(self, p: int, w: Weight) -> QueryRecord:
        """Returns `QueryRecord` on the linkage of `w` to (0,0)."""
        check_prime(p)
        witnesses = linkage_witnesses(p, w)
        return QueryRecord(
            "linkage", p, weight=w,
            linked=len(witnesses) > 0,
            g1_linked=g1_linked_residue(p, w),
            witnesses=[str(element) for element in witnesses],
        )

    def ext1_query(self, p: int, row: Weight, mu: Weight) -> QueryRecord:
        """Returns `QueryRecord` for Ext1_G(L(`row`), L(`mu`))."""
        self.check(p, mu)
        dec = steinberg_decompose(p, mu)
        result = self.ext1.ext1_dim(p, row, dec)
        return QueryRecord(
            "ext1", p, weight=mu, twist=dec.twist, factors=list(dec.factors),
            row=row, dim=result.dim, family=result.family,
            family_id=result.family_id, index=result.index,
            errata=result.errata,
        )

    def collect_log(self) -> Logger:
        """Returns a `Logger` merging the logs of all components."""
        log = Logger(default_origin=self.TAG)
        for component_log in (
            self.log, self.g1.log, self.ext1.log, self.pipeline.log,
            self.classifier.log,
        ):
            log.merge(component_log)
        return log
