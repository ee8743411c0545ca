"""
This module defines the `TableLoader` component.
"""

from pathlib import Path
from typing import Iterator

import yaml
from dcm_common import LoggingContext as Context, Logger

from sl3coh.models import (
    Weight, PairPattern, ValuePattern, FamilyPattern, REGIMES, G1Row,
    Ext1Entry, ErrataEntry, TableSet,
)


class TableLoader:
    """
    A `TableLoader` reads the versioned table data from a data
    directory containing the manifest 'tables.yaml'.

    Unreadable lines are skipped and reported as warnings in `log`.

    Keyword arguments:
    data_dir -- directory of the table data
    errata -- whether to apply the errata overlay
              (default True)
    """
    TAG: str = "Table Loader"
    MANIFEST: str = "tables.yaml"

    def __init__(self, data_dir: Path, errata: bool = True) -> None:
        self.data_dir = Path(data_dir)
        self.errata = errata
        self.log = Logger(default_origin=self.TAG)

    def _lines(self, name: str) -> Iterator[tuple[int, str]]:
        path = self.data_dir / name
        for number, line in enumerate(
            path.read_text(encoding="utf-8").splitlines(), start=1
        ):
            line = line.strip()
            if line and not line.startswith("#"):
                yield number, line

    def _warn(self, name: str, number: int, reason: str) -> None:
        self.log.log(
            Context.WARNING,
            body=f"Skipping line {number} of '{name}': {reason}"
        )

    def manifest(self) -> dict:
        """Returns the parsed manifest."""
        return yaml.load(
            (self.data_dir / self.MANIFEST).read_text(encoding="utf-8"),
            Loader=yaml.SafeLoader
        )

    def load(self) -> TableSet:
        """Returns all tables listed in the manifest."""
        self.log = Logger(default_origin=self.TAG)
        manifest = self.manifest()
        files = manifest["tables"]
        errata = self.load_errata(files["errata"])
        tables = TableSet(
            version=str(manifest["version"]),
            errata_active=self.errata,
            g1=self.load_g1(files["g1_cohom"]),
            ext1=self.load_ext1(files["ext1"], errata),
            families=self.load_families(files["h2_families"]),
            errata=errata,
        )
        self.log.log(
            Context.INFO,
            body=f"Loaded table data v{tables.version} from '{self.data_dir}' "
            + f"(errata overlay {'active' if self.errata else 'inactive'})."
        )
        return tables

    def load_g1(self, name: str) -> list[G1Row]:
        """Returns rows of the G1-cohomology table `name`."""
        rows = []
        for number, line in self._lines(name):
            fields = line.split(";")
            if len(fields) != 4:
                self._warn(name, number, "expected four fields.")
                continue
            regime, degree, weight, value = (f.strip() for f in fields)
            if regime not in REGIMES:
                self._warn(name, number, f"unknown regime '{regime}'.")
                continue
            if degree not in ("1", "2"):
                self._warn(name, number, f"unsupported degree '{degree}'.")
                continue
            try:
                rows.append(
                    G1Row(
                        f"g1/{regime}/{degree}/{weight}",
                        regime,
                        int(degree),
                        PairPattern.parse(weight),
                        ValuePattern.parse(value),
                    )
                )
            except ValueError as exc_info:
                self._warn(name, number, str(exc_info))
        return rows

    def load_errata(self, name: str) -> list[ErrataEntry]:
        """Returns the entries of the errata overlay `name`."""
        entries = []
        for number, line in self._lines(name):
            fields = line.split(";", 5)
            if len(fields) != 6 or fields[0] != "replace":
                self._warn(name, number, "expected a 'replace' entry.")
                continue
            _, regime, row, old, new, justification = (
                f.strip() for f in fields
            )
            try:
                entries.append(
                    ErrataEntry(
                        f"errata/{len(entries) + 1}",
                        regime,
                        Weight.parse(row),
                        old,
                        new,
                        justification,
                    )
                )
            except ValueError as exc_info:
                self._warn(name, number, str(exc_info))
        return entries

    def load_ext1(
        self, name: str, errata: list[ErrataEntry]
    ) -> list[Ext1Entry]:
        """
        Returns the families of the Ext1 table `name`. If the overlay is
        active, families listed in `errata` are replaced by their
        corrected reading. Every errata entry is linked to the family it
        concerns (`family_id`).

        Family identifiers read 'ext1/<regime>/<row>/<n>' with n the
        position within the row as printed.
        """
        entries = []
        positions: dict[tuple[str, Weight], int] = {}
        pending = {(e.regime, e.row, e.old): e for e in errata}
        for number, line in self._lines(name):
            fields = line.split(";")
            if len(fields) != 3:
                self._warn(name, number, "expected three fields.")
                continue
            regime, row_text, text = (f.strip() for f in fields)
            if regime not in REGIMES:
                self._warn(name, number, f"unknown regime '{regime}'.")
                continue
            try:
                row = Weight.parse(row_text)
            except ValueError as exc_info:
                self._warn(name, number, str(exc_info))
                continue
            position = positions.get((regime, row), 0) + 1
            positions[(regime, row)] = position
            family_id = f"ext1/{regime}/{row}/{position}"
            entry = pending.pop((regime, row, text), None)
            applied = None
            if entry is not None:
                errata[errata.index(entry)] = ErrataEntry(
                    entry.entry_id, entry.regime, entry.row, entry.old,
                    entry.new, entry.justification, family_id,
                )
                if self.errata:
                    self.log.log(
                        Context.INFO,
                        body=f"Applying {entry.entry_id} to {family_id}: "
                        + f"'{entry.old}' -> '{entry.new}'."
                    )
                    text = entry.new
                    applied = entry.entry_id
            try:
                family = FamilyPattern.parse(family_id, text)
            except ValueError as exc_info:
                self._warn(name, number, str(exc_info))
                continue
            entries.append(Ext1Entry(regime, row, family, applied))
        for entry in pending.values():
            self.log.log(
                Context.WARNING,
                body=f"Errata entry {entry.entry_id} matches no family "
                + f"('{entry.old}')."
            )
        return entries

    def load_families(self, name: str) -> list[FamilyPattern]:
        """Returns the families of non-vanishing H2 listed in `name`."""
        families = []
        for number, line in self._lines(name):
            fields = line.split(";")
            if len(fields) != 2 or not fields[0].strip().isdigit():
                self._warn(name, number, "expected 'id;family'.")
                continue
            try:
                families.append(
                    FamilyPattern.parse(fields[0].strip(), fields[1])
                )
            except ValueError as exc_info:
                self._warn(name, number, str(exc_info))
        return families
