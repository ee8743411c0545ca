"""
Crosscheck Command-class definition
"""

from typing import TextIO
import json
import argparse

from sl3coh.handlers import get_crosscheck_handler
from sl3coh.models import CrosscheckRequest
from sl3coh.components import CrossChecker
from sl3coh.commands.command import Command, open_output


def prime_list(text: str) -> list[int]:
    """argparse-type for comma-separated integers."""
    return [int(part) for part in text.split(",")]


class CrosscheckCommand(Command):
    """Command for the discrepancy report of both routes."""

    NAME = "crosscheck"
    HELP = "cross-check both routes and report discrepancies as JSON"
    REQUEST = CrosscheckRequest
    ARGUMENTS = {
        "primes": "primes",
        "max_len": "maxLen",
        "max_r": "maxR",
        "max_d": "maxD",
        "output": "output",
    }

    def get_handler(self):
        return get_crosscheck_handler()

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--p", dest="primes", type=prime_list, required=True,
            help="comma-separated primes",
        )
        parser.add_argument(
            "--max-len", type=int,
            help="enumerate all a, b < p^MAX_LEN",
        )
        parser.add_argument(
            "--max-r", type=int, help="largest free index of family instances"
        )
        parser.add_argument(
            "--max-d", type=int,
            help="largest additional twist of family instances",
        )
        parser.add_argument("--output", help="output file (default stdout)")

    def execute(
        self,
        request: CrosscheckRequest,
        args: argparse.Namespace,
        stdout: TextIO,
    ) -> int:
        engine = self.make_engine(args)
        checker = CrossChecker(engine, self.config.WORKERS)
        report = checker.report(
            request.primes, request.max_len, request.max_r, request.max_d,
            metadata={"version": self.config.SELF_DESCRIPTION["version"]},
        )
        for prime_report in report.primes:
            for record in prime_report.discrepancies:
                self.validate(record)
        with open_output(request.output, stdout) as file:
            file.write(json.dumps(report.json, indent=2, sort_keys=True))
            file.write("\n")
        self.collect(engine)
        self.log.merge(checker.log)
        return 0
