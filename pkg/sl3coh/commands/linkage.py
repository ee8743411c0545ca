"""
Linkage Command-class definition
"""

from typing import TextIO
import argparse

from sl3coh.handlers import get_linkage_handler
from sl3coh.models import LinkageRequest, parse_weight_input
from sl3coh.commands.command import Command


class LinkageCommand(Command):
    """Command for linkage queries."""

    NAME = "linkage"
    HELP = "decide whether a weight is linked to (0,0)"
    REQUEST = LinkageRequest
    ARGUMENTS = {"p": "p", "weight": "weight"}

    def get_handler(self):
        return get_linkage_handler()

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=int, required=True, help="prime")
        parser.add_argument(
            "--weight", required=True,
            help="weight 'a,b' (use '--weight=-2,1' for negative entries)",
        )

    def execute(
        self,
        request: LinkageRequest,
        args: argparse.Namespace,
        stdout: TextIO,
    ) -> int:
        engine = self.make_engine(args)
        self.emit(
            engine.linkage_query(
                request.p, parse_weight_input(request.weight, request.p)
            ),
            stdout,
        )
        self.collect(engine)
        return 0
