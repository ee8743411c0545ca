"""Configuration module for the 'sl3coh'-app."""

import os
import json
from pathlib import Path
from importlib.metadata import version, PackageNotFoundError

import yaml


def _tool_version() -> str:
    try:
        return version("sl3coh")
    except PackageNotFoundError:
        return "unknown"


class AppConfig:
    """
    Configuration for the 'sl3coh'-app.
    """

    # ------ TABLES ------
    DATA_DIR = Path(
        os.environ.get("SL3COH_DATA")
        or Path(__file__).parent / "data"
    )
    TABLE_MANIFEST = "tables.yaml"
    ERRATA_ACTIVE = (int(os.environ.get("SL3COH_ERRATA") or 1)) == 1

    # ------ ENGINE ------
    # largest number of base-p digits accepted per coordinate
    MAX_DIGITS = int(os.environ.get("SL3COH_MAX_DIGITS") or 64)
    # worker processes for enumeration; 1 runs serially
    WORKERS = int(os.environ.get("SL3COH_WORKERS") or 1)

    # ------ OUTPUT ------
    VALIDATE_RECORDS = \
        (int(os.environ.get("SL3COH_VALIDATE_RECORDS") or 1)) == 1
    RECORD_SCHEMA = Path(__file__).parent / "schema" \
        / "query_record.json"

    def __init__(self) -> None:
        self.TABLES = yaml.load(
            (Path(self.DATA_DIR) / self.TABLE_MANIFEST).read_text(
                encoding="utf-8"
            ),
            Loader=yaml.SafeLoader
        )
        self.SCHEMA = json.loads(
            Path(self.RECORD_SCHEMA).read_text(encoding="utf-8")
        )
        self.set_identity()

    def set_identity(self) -> None:
        """Generates the self-description of this configuration."""
        self.SELF_DESCRIPTION = {
            "description":
                "Computes H^2(G, V) for G = SL3 in characteristic p "
                + "by table-driven spectral-sequence evaluation and by "
                + "classification against known families.",
            "version": {
                "app": _tool_version(),
                "tables": str(self.TABLES["version"]),
            },
            "configuration": {
                "settings": {
                    "tables": {
                        "data": str(self.DATA_DIR),
                        "files": dict(self.TABLES["tables"]),
                        "errata": self.ERRATA_ACTIVE,
                    },
                    "engine": {
                        "max_digits": self.MAX_DIGITS,
                        "workers": self.WORKERS,
                    },
                    "output": {
                        "validate_records": self.VALIDATE_RECORDS,
                        "schema": self.SCHEMA.get("$id"),
                    },
                },
            },
        }
