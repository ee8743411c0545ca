"""
Table Command-class definition
"""

from typing import TextIO
import csv
import argparse

from sl3coh.handlers import get_table_handler
from sl3coh.models import TableRequest, QueryRecord
from sl3coh.components import CrossChecker
from sl3coh.commands.command import Command, open_output


COLUMNS = [
    "a", "b", "h2_pipeline", "h2_theorem", "agree", "pattern_ids",
    "e2_02", "e2_11", "e2_20",
]


def table_row(record: QueryRecord) -> dict:
    """Returns the CSV row of `record`."""
    return {
        "a": record.weight.a,
        "b": record.weight.b,
        "h2_pipeline": record.h2_pipeline,
        "h2_theorem": record.h2_theorem,
        "agree": str(record.agree).lower(),
        "pattern_ids": ";".join(str(i) for i in record.pattern_ids),
        "e2_02": record.e2_02,
        "e2_11": record.e2_11,
        "e2_20": record.e2_20,
    }


class TableCommand(Command):
    """Command for tabulating both routes over a weight grid."""

    NAME = "table"
    HELP = "tabulate both routes for all a, b < MAX as CSV"
    REQUEST = TableRequest
    ARGUMENTS = {
        "p": "p",
        "bound": "max",
        "discrepancies_only": "discrepanciesOnly",
        "output": "output",
    }

    def get_handler(self):
        return get_table_handler()

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=int, required=True, help="prime")
        parser.add_argument(
            "--max", dest="bound", type=int, required=True,
            help="exclusive bound for both coordinates",
        )
        parser.add_argument(
            "--discrepancies-only", action="store_true",
            help="emit only rows where the routes disagree",
        )
        parser.add_argument("--output", help="output file (default stdout)")

    def execute(
        self, request: TableRequest, args: argparse.Namespace, stdout: TextIO
    ) -> int:
        engine = self.make_engine(args)
        checker = CrossChecker(engine, self.config.WORKERS)
        records = checker.enumerate(request.p, request.bound)
        with open_output(request.output, stdout) as file:
            writer = csv.DictWriter(file, fieldnames=COLUMNS, lineterminator="\n")
            writer.writeheader()
            for record in records:
                if request.discrepancies_only and record.agree:
                    continue
                writer.writerow(table_row(record))
        self.collect(engine)
        self.log.merge(checker.log)
        return 0
