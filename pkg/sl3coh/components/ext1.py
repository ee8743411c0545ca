"""
This module defines the `Ext1Tables` component.
"""

from itertools import product

from dcm_common import LoggingContext as Context, Logger

from sl3coh.models import (
    Weight, Decomposition, Ext1Result, Ext1Entry, PatternInstance, TableSet,
    REGIMES, regime_of,
)
from sl3coh.weight_lattice import check_prime


ROWS = (Weight(0, 0), Weight(1, 0), Weight(0, 1), Weight(1, 1))


class Ext1Tables:
    """
    An `Ext1Tables` decides Ext1_G(row, mu) for the four supported
    rows and arbitrary simple `mu` by matching the canonical
    decomposition of `mu` against the families of the loaded table.

    Keyword arguments:
    tables -- loaded table data
    """
    TAG: str = "Ext1 Tables"

    def __init__(self, tables: TableSet) -> None:
        self.log = Logger(default_origin=self.TAG)
        self.entries: dict[tuple[str, Weight], list[Ext1Entry]] = {}
        for entry in tables.ext1:
            self.entries.setdefault((entry.regime, entry.row), []).append(
                entry
            )

    @staticmethod
    def check_row(row: Weight) -> None:
        """Raises `ValueError` if `row` is not a supported row."""
        if row not in ROWS:
            raise ValueError(
                f"Ext1 row {row} is not supported (expected one of "
                + f"{', '.join(str(r) for r in ROWS)})."
            )

    def matches(
        self, p: int, row: Weight, mu: Decomposition
    ) -> list[tuple[Ext1Entry, PatternInstance]]:
        """Returns all families of `row` matching `mu`."""
        check_prime(p)
        self.check_row(row)
        if mu.p != p:
            raise ValueError(
                f"Decomposition {mu} belongs to p={mu.p}, not p={p}."
            )
        result = []
        for entry in self.entries.get((regime_of(p), row), []):
            instance = entry.family.match(mu)
            if instance is not None:
                result.append((entry, instance))
        return result

    def ext1_dim(self, p: int, row: Weight, mu: Decomposition) -> Ext1Result:
        """
        Returns `Ext1Result` for Ext1_G(`row`, `mu`). If more than one
        family matches, a warning is logged and the first one is used.

        Keyword arguments:
        p -- characteristic
        row -- one of (0,0), (1,0), (0,1), (1,1)
        mu -- canonical decomposition of the second argument
        """
        matches = self.matches(p, row, mu)
        if not matches:
            return Ext1Result(row, mu)
        if len(matches) > 1:
            self.log.log(
                Context.WARNING,
                body=f"Ext1({row}, {mu}) at p={p} matches "
                + f"{len(matches)} families: "
                + ", ".join(entry.family.family_id for entry, _ in matches)
                + "."
            )
        entry, instance = matches[0]
        return Ext1Result(
            row, mu, 1,
            family=entry.family.source,
            family_id=entry.family.family_id,
            index=instance.value,
            errata=entry.errata is not None,
        )

    def h1_g(self, p: int, mu: Decomposition) -> int:
        """Returns the dimension of H1(G, `mu`)."""
        return self.ext1_dim(p, ROWS[0], mu).dim

    def dual_closure_defects(self, regime: str) -> list[str]:
        """
        Returns identifiers of families in `regime` whose simultaneous
        dualization of row and factors is not listed.
        """
        if regime not in REGIMES:
            raise ValueError(f"Unknown regime '{regime}'.")
        defects = []
        for (entry_regime, row), entries in self.entries.items():
            if entry_regime != regime:
                continue
            partners = {
                e.family.factors
                for e in self.entries.get((regime, row.dual()), [])
            }
            for entry in entries:
                if entry.family.dual().factors not in partners:
                    defects.append(entry.family.family_id)
        return sorted(defects)

    def scan(self, p: int, max_len: int) -> dict[str, list[dict]]:
        """
        Scans all `mu` with at most `max_len` base-`p` digits against
        every row. Returns a dictionary listing pairs matched by more
        than one family ('multiple') and pairs violating
        ext1_dim(row, mu) = ext1_dim(dual(row), dual(mu)) ('asymmetric').
        """
        check_prime(p)
        result = {"multiple": [], "asymmetric": []}
        digits = [Weight(a, b) for a in range(p) for b in range(p)]
        for length in range(1, max_len + 1):
            for word in product(digits, repeat=length):
                if length > 1 and word[-1].zero:
                    continue
                mu = Decomposition.from_digits(p, word)
                if length > 1 and mu.is_zero:
                    continue
                for row in ROWS:
                    found = self.matches(p, row, mu)
                    if len(found) > 1:
                        result["multiple"].append(
                            {
                                "row": str(row),
                                "mu": str(mu),
                                "families": [
                                    e.family.family_id for e, _ in found
                                ],
                            }
                        )
                    if bool(found) != bool(
                        self.matches(p, row.dual(), mu.dual())
                    ):
                        result["asymmetric"].append(
                            {"row": str(row), "mu": str(mu)}
                        )
        return result
