"""
This module defines the `CrossChecker` component.
"""

from typing import Iterator, Optional
from collections import Counter
from multiprocessing import Pool

from dcm_common import LoggingContext as Context, Logger

from sl3coh.models import (
    Weight, QueryRecord, PatternFailure, PrimeReport, ErrataCitation,
    CrossCheckReport,
)
from sl3coh.weight_lattice import check_prime, check_guard, steinberg_decompose
from sl3coh.weyl_linkage import g_linked_to_zero
from sl3coh.components.engine import Engine


RowResult = tuple[list[QueryRecord], Counter]

# engine of a worker process
_ENGINE: Optional[Engine] = None


def _init_worker(data_dir, errata: bool, max_digits: int) -> None:
    global _ENGINE  # pylint: disable=global-statement
    _ENGINE = Engine(data_dir, errata, max_digits)


def _evaluate_row(args: tuple[int, int, int]) -> RowResult:
    return evaluate_row(_ENGINE, *args)


def evaluate_row(engine: Engine, p: int, a: int, bound: int) -> RowResult:
    """
    Returns records for all weights (`a`, b) with b < `bound` together
    with the number of weights whose pipeline trace cites each table
    family. Disagreeing records carry their trace.
    """
    records = []
    citations = Counter()
    for b in range(bound):
        w = Weight(a, b)
        record = engine.h2_query(p, w, route="both")
        if not record.agree:
            record = engine.h2_query(p, w, route="both", explain=True)
        records.append(record)
        citations.update(
            engine.pipeline.evaluate(
                steinberg_decompose(p, w)
            ).trace.cited_rows()
        )
    return records, citations


class CrossChecker:
    """
    A `CrossChecker` enumerates weight grids with both H^2-routes and
    collects discrepancies and consistency findings.

    Keyword arguments:
    engine -- engine used for serial evaluation and family instances
    workers -- number of worker processes (1 evaluates serially)
               (default 1)
    data_dir -- table data for worker processes
                (default None; uses the directory `engine` was loaded from)
    """
    TAG: str = "Cross-Check"

    def __init__(
        self, engine: Engine, workers: int = 1, data_dir=None
    ) -> None:
        self.log = Logger(default_origin=self.TAG)
        self.engine = engine
        self.workers = workers
        self.data_dir = data_dir or engine.loader.data_dir

    def _rows(self, p: int, bound: int) -> Iterator[RowResult]:
        if self.workers <= 1:
            for a in range(bound):
                yield evaluate_row(self.engine, p, a, bound)
            return
        with Pool(
            self.workers,
            initializer=_init_worker,
            initargs=(
                self.data_dir,
                self.engine.tables.errata_active,
                self.engine.max_digits,
            ),
        ) as pool:
            yield from pool.imap(
                _evaluate_row, [(p, a, bound) for a in range(bound)]
            )

    def enumerate(
        self, p: int, bound: int, citations: Optional[Counter] = None
    ) -> Iterator[QueryRecord]:
        """
        Returns records for all dominant (a, b) with a, b < `bound` in
        order of (a, b). Citation counts are accumulated in `citations`.

        Keyword arguments:
        p -- characteristic
        bound -- exclusive bound for both coordinates
        citations -- counter of cited table families
                     (default None)
        """
        check_prime(p)
        if bound < 1:
            raise ValueError(f"Bound must be positive, got {bound}.")
        check_guard(p, Weight(bound - 1, bound - 1), self.engine.max_digits)
        return self._records(p, bound, citations)

    def _records(
        self, p: int, bound: int, citations: Optional[Counter]
    ) -> Iterator[QueryRecord]:
        for records, row_citations in self._rows(p, bound):
            if citations is not None:
                citations.update(row_citations)
            yield from records

    def pattern_failures(
        self, p: int, max_r: int, max_d: int
    ) -> list[PatternFailure]:
        """
        Returns family instances (r <= `max_r`, twisted by d <= `max_d`)
        whose pipeline dimension is not 1. Instances collapsing to the
        zero weight are not evaluated.
        """
        failures = []
        for instance in self.engine.classifier.instantiate_patterns(p, max_r):
            if instance.zero:
                continue
            for d in range(max_d + 1):
                dec = instance.decomposition.twisted(d)
                result = self.engine.pipeline.evaluate(dec)
                if result.total != 1:
                    failures.append(
                        PatternFailure(instance, d, dec.weight(), result.total)
                    )
        return failures

    def prime_report(
        self, p: int, bound: int, max_r: int, max_d: int,
        citations: Optional[Counter] = None,
    ) -> PrimeReport:
        """Returns `PrimeReport` for `p`."""
        report = PrimeReport(p, bound)
        for record in self.enumerate(p, bound, citations):
            report.weights += 1
            terms = (record.e2_02, record.e2_11, record.e2_20)
            if record.h2_pipeline > 0:
                report.positive += 1
                if not g_linked_to_zero(p, record.weight):
                    report.linkage_violations.append(record.weight)
            if record.h2_pipeline >= 2:
                report.multi_dimensional.append(record.weight)
            if sum(1 for value in terms if value) > 1:
                report.multiple_terms.append(record.weight)
            if not record.agree:
                report.discrepancies.append(record)
        report.pattern_failures = self.pattern_failures(p, max_r, max_d)
        self.log.log(
            Context.INFO,
            body=f"Checked {report.weights} weights for p={p}: "
            + f"{report.positive} with non-zero H2, "
            + f"{len(report.discrepancies)} discrepancies."
        )
        if report.discrepancies:
            self.log.log(
                Context.WARNING,
                body=f"Routes disagree on {len(report.discrepancies)} "
                + f"weights for p={p}."
            )
        return report

    def report(
        self,
        primes: list[int],
        max_len: int,
        max_r: int,
        max_d: int,
        metadata: Optional[dict] = None,
    ) -> CrossCheckReport:
        """
        Returns `CrossCheckReport` over all a, b < p^`max_len` for every
        prime in `primes`.

        Keyword arguments:
        primes -- characteristics
        max_len -- number of base-p digits enumerated
        max_r -- largest free index of family instances
        max_d -- largest additional twist of family instances
        metadata -- additional metadata
                    (default None)
        """
        citations = Counter()
        reports = [
            self.prime_report(p, p**max_len, max_r, max_d, citations)
            for p in primes
        ]
        return CrossCheckReport(
            metadata={
                **(metadata or {}),
                "tables": self.engine.tables.version,
                "errata": self.engine.tables.errata_active,
                "primes": list(primes),
                "max_len": max_len,
                "max_r": max_r,
                "max_d": max_d,
            },
            primes=reports,
            errata=[
                ErrataCitation(
                    entry,
                    self.engine.tables.errata_active,
                    citations.get(entry.family_id, 0),
                )
                for entry in self.engine.tables.errata
            ],
        )
