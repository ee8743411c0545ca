"""
This module defines the `G1Cohomology` component.
"""

from typing import Optional

from dcm_common import Logger

from sl3coh.models import Weight, ModuleExpr, TableSet, regime_of, ZERO
from sl3coh.weight_lattice import check_prime, check_restricted
from sl3coh.weyl_linkage import enumerate_g1_linked


class G1Cohomology:
    """
    A `G1Cohomology` answers queries for the G-module structure of
    H^i(G1, L(lam0))^[-1], i = 0, 1, 2, for restricted `lam0`.

    Explicit table rows take precedence; weights without an explicit
    row are served by the dual closure (dual weight, dualized value).

    Keyword arguments:
    tables -- loaded table data
    """
    TAG: str = "G1 Cohomology"

    def __init__(self, tables: TableSet) -> None:
        self.log = Logger(default_origin=self.TAG)
        self.rows = tables.g1
        self._cache: dict[tuple[int, int, Weight], tuple] = {}

    @staticmethod
    def induced_structure(p: int, lam: Weight) -> ModuleExpr:
        """
        Returns the structure of the induced module H0(`lam`) for a
        restricted `lam` G1-linked to (0,0): simple unless p > 2 and
        `lam` = (p-2,p-2), where it is uniserial with socle `lam` and
        head K.
        """
        check_prime(p)
        check_restricted(p, lam)
        if lam not in enumerate_g1_linked(p):
            raise ValueError(
                f"Weight {lam} is not G1-linked to (0,0) for p={p}."
            )
        if p > 2 and lam == Weight(p - 2, p - 2):
            return ModuleExpr.chain(lam, ZERO)
        return ModuleExpr.simple(lam)

    def lookup(
        self, p: int, degree: int, lam0: Weight
    ) -> tuple[ModuleExpr, Optional[str]]:
        """
        Returns the module structure of H^`degree`(G1, `lam0`)^[-1]
        together with the identifier of the row that produced it
        (`None` if the value is zero). Rows served by the dual closure
        carry the suffix '/dual'.

        Keyword arguments:
        p -- characteristic
        degree -- cohomological degree (0, 1 or 2)
        lam0 -- restricted weight
        """
        key = (p, degree, lam0)
        if key in self._cache:
            return self._cache[key]
        check_prime(p)
        check_restricted(p, lam0)
        if degree not in (0, 1, 2):
            raise ValueError(
                f"Degree {degree} is not supported (expected 0, 1 or 2)."
            )
        regime = regime_of(p)
        if degree == 0:
            result = (
                (ModuleExpr.trivial(), f"g1/{regime}/0/(0,0)")
                if lam0.zero else (ModuleExpr(), None)
            )
        else:
            result = self._lookup_table(p, regime, degree, lam0)
        self._cache[key] = result
        return result

    def _lookup_table(
        self, p: int, regime: str, degree: int, lam0: Weight
    ) -> tuple[ModuleExpr, Optional[str]]:
        rows = [
            row for row in self.rows
            if row.regime == regime and row.degree == degree
        ]
        explicit = [row for row in rows if row.weight.evaluate(p) == lam0]
        if len(explicit) > 1:
            raise RuntimeError(
                f"Table rows {', '.join(r.row_id for r in explicit)} "
                + f"coincide at p={p}."
            )
        if explicit:
            return (
                explicit[0].value.evaluate(p, self.induced_structure),
                explicit[0].row_id,
            )
        for row in rows:
            if row.weight.evaluate(p).dual() == lam0:
                return (
                    row.value.evaluate(p, self.induced_structure).dual(),
                    f"{row.row_id}/dual",
                )
        return ModuleExpr(), None

    def h_g1(self, p: int, degree: int, lam0: Weight) -> ModuleExpr:
        """Returns H^`degree`(G1, `lam0`)^[-1] as `ModuleExpr`."""
        return self.lookup(p, degree, lam0)[0]
