"""
This module defines the `H2Pipeline` component.
"""

from dcm_common import LoggingContext as Context, Logger

from sl3coh.models import (
    Weight, Decomposition, Trace, TraceStep, TermResult, PipelineResult,
)
from sl3coh.weight_lattice import (
    check_prime, check_dominant, check_guard, steinberg_decompose,
)
from sl3coh.components.g1_cohom import G1Cohomology
from sl3coh.components.ext1 import Ext1Tables, ROWS


class H2Pipeline:
    """
    An `H2Pipeline` computes dim H^2(G, L(lam)) as the sum of the
    E2-terms E2^{02} + E2^{11} + E2^{20} of the spectral sequence for
    G1 in G, writing lam = lam0 + p lam' with lam0 restricted.

    E2^{20} vanishes unless lam0 = (0,0), in which case it equals
    H^2(G, lam') and is evaluated recursively. H^2(G, K) = 0 is the
    base case.

    Keyword arguments:
    g1 -- G1-cohomology tables
    ext1 -- Ext1 tables
    max_digits -- guard for the number of base-p digits
                  (default 64)
    """
    TAG: str = "H2 Pipeline"
    CACHE_SIZE: int = 2**16

    def __init__(
        self, g1: G1Cohomology, ext1: Ext1Tables, max_digits: int = 64
    ) -> None:
        self.g1 = g1
        self.ext1 = ext1
        self.max_digits = max_digits
        self.log = Logger(default_origin=self.TAG)
        self._cache: dict[Decomposition, PipelineResult] = {}

    def e2_02(self, p: int, dec: Decomposition) -> TermResult:
        """
        Returns Hom_G(H^2(G1, lam0)^[-1]*, lam'). Only a restricted lam'
        can be a head label of the dualized table value.
        """
        lam0 = dec.lambda0
        rest = dec.remainder()
        value, row = self.g1.lookup(p, 2, lam0)
        trace = Trace()
        if value.is_zero:
            trace.add(TraceStep("E02", 0, lambda0=lam0, note="H2(G1) = 0"))
            return TermResult(0, trace)
        if rest.twist > 0 or len(rest.factors) > 1:
            trace.add(
                TraceStep(
                    "E02", 0, lambda0=lam0, row=row,
                    note=f"lambda' = {rest} is not restricted",
                )
            )
            return TermResult(0, trace)
        target = rest.factors[0]
        dim = value.dual().hom_to_simple(target)
        trace.add(
            TraceStep(
                "E02", dim, lambda0=lam0, row=row,
                family=f"Hom({value.dual()}, {target})",
            )
        )
        return TermResult(dim, trace)

    def e2_11(self, p: int, dec: Decomposition) -> TermResult:
        """
        Returns the sum of Ext1_G(S, lam') over the summands S of
        H^1(G1, lam0)^[-1]*.
        """
        lam0 = dec.lambda0
        rest = dec.remainder()
        value, row = self.g1.lookup(p, 1, lam0)
        trace = Trace()
        if value.is_zero:
            trace.add(TraceStep("E11", 0, lambda0=lam0, note="H1(G1) = 0"))
            return TermResult(0, trace)
        total = 0
        for chain in value.dual().summands:
            if len(chain) != 1 or chain[0] not in ROWS:
                raise RuntimeError(
                    f"Summand {'|'.join(str(c) for c in chain)} of row "
                    + f"'{row}' is not a supported Ext1 row."
                )
            result = self.ext1.ext1_dim(p, chain[0], rest)
            total += result.dim
            trace.add(
                TraceStep(
                    "E11", result.dim, lambda0=lam0, row=row,
                    family=result.family_id, errata=result.errata,
                    note=f"Ext1({chain[0]}, {rest})",
                )
            )
        return TermResult(total, trace)

    def e2_20(self, p: int, dec: Decomposition) -> TermResult:
        """
        Returns H^2(G, lam') if lam0 = (0,0), otherwise 0.
        """
        lam0 = dec.lambda0
        trace = Trace()
        if not lam0.zero:
            trace.add(TraceStep("E20", 0, lambda0=lam0, note="H0(G1) = 0"))
            return TermResult(0, trace)
        if dec.is_zero:
            trace.add(TraceStep("axiom", 0, note="H2(G, K) = 0"))
            return TermResult(0, trace)
        rest = dec.remainder()
        sub = self.evaluate(rest)
        trace.add(
            TraceStep(
                "E20", sub.total, lambda0=lam0, note=f"untwist to {rest}"
            )
        )
        trace.extend(sub.trace, depth=1)
        return TermResult(sub.total, trace)

    def evaluate(self, dec: Decomposition) -> PipelineResult:
        """Returns `PipelineResult` for a canonical decomposition."""
        if dec in self._cache:
            return self._cache[dec]
        p = dec.p
        if dec.is_zero:
            trace = Trace()
            trace.add(TraceStep("axiom", 0, note="H2(G, K) = 0"))
            result = PipelineResult(p, dec.weight(), trace=trace)
        else:
            terms = (self.e2_02(p, dec), self.e2_11(p, dec), self.e2_20(p, dec))
            trace = Trace()
            for term in terms:
                trace.extend(term.trace)
            result = PipelineResult(
                p, dec.weight(), *(term.value for term in terms), trace=trace
            )
            self._check(result)
        if len(self._cache) >= self.CACHE_SIZE:
            self._cache.clear()
        self._cache[dec] = result
        return result

    def _check(self, result: PipelineResult) -> None:
        messages = []
        if result.total >= 2:
            messages.append(
                f"H2(G, {result.weight}) at p={result.p} evaluates to "
                + f"dimension {result.total}."
            )
        if sum(1 for value in result.terms if value) > 1:
            messages.append(
                f"More than one E2-term is non-zero for {result.weight} at "
                + f"p={result.p} (E02={result.e2_02}, E11={result.e2_11}, "
                + f"E20={result.e2_20})."
            )
        for message in messages:
            self.log.log(Context.WARNING, body=message)
            result.trace.warnings.append(message)

    def h2_dim(self, p: int, w: Weight) -> PipelineResult:
        """
        Returns `PipelineResult` for the simple module of highest weight
        `w`.

        Keyword arguments:
        p -- characteristic
        w -- dominant weight
        """
        check_prime(p)
        check_dominant(w)
        check_guard(p, w, self.max_digits)
        return self.evaluate(steinberg_decompose(p, w))
