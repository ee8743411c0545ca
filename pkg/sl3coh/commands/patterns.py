"""
Patterns Command-class definition
"""

from typing import TextIO
import json
import argparse

from sl3coh.handlers import get_patterns_handler
from sl3coh.models import PatternsRequest
from sl3coh.commands.command import Command


class PatternsCommand(Command):
    """Command listing the instantiated families of non-vanishing H^2."""

    NAME = "patterns"
    HELP = "list the families of non-vanishing H^2 instantiated at p"
    REQUEST = PatternsRequest
    ARGUMENTS = {"p": "p", "max_r": "maxR", "include_zero": "includeZero"}

    def get_handler(self):
        return get_patterns_handler()

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=int, required=True, help="prime")
        parser.add_argument("--max-r", type=int, help="largest free index")
        parser.add_argument(
            "--include-zero", action=argparse.BooleanOptionalAction,
            help="list instances collapsing to the zero weight",
        )

    def execute(
        self,
        request: PatternsRequest,
        args: argparse.Namespace,
        stdout: TextIO,
    ) -> int:
        engine = self.make_engine(args)
        for instance in engine.classifier.instantiate_patterns(
            request.p, request.max_r
        ):
            if instance.zero and not request.include_zero:
                continue
            print(
                json.dumps(
                    instance.json | {
                        "weight": instance.decomposition.weight().json,
                        "text": str(instance.decomposition),
                    },
                    sort_keys=True,
                ),
                file=stdout,
            )
        self.collect(engine)
        return 0
