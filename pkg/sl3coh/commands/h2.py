"""
H2 Command-class definition
"""

from typing import TextIO
import argparse

from sl3coh.handlers import get_h2_handler
from sl3coh.models import H2Request, parse_weight_input
from sl3coh.components import ROUTES
from sl3coh.commands.command import Command


class H2Command(Command):
    """Command for single H^2-queries."""

    NAME = "h2"
    HELP = "compute dim H^2(G, L(w)) for one or more weights"
    REQUEST = H2Request
    ARGUMENTS = {
        "p": "p",
        "weights": "weights",
        "twist": "twist",
        "route": "route",
        "explain": "explain",
        "strict": "strict",
    }

    def get_handler(self):
        return get_h2_handler()

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=int, required=True, help="prime")
        parser.add_argument(
            "--weight", dest="weights", action="append", required=True,
            help="weight 'a,b' or factors 'a0,b0;a1,b1;...'; repeatable",
        )
        parser.add_argument(
            "--twist", type=int, help="additional Frobenius twist"
        )
        parser.add_argument("--route", choices=ROUTES)
        parser.add_argument(
            "--explain", action="store_true", help="attach pipeline trace"
        )
        parser.add_argument(
            "--strict", action="store_true",
            help="exit with status 2 if the routes disagree",
        )

    def execute(
        self, request: H2Request, args: argparse.Namespace, stdout: TextIO
    ) -> int:
        engine = self.make_engine(args)
        disagreement = False
        for text in request.weights:
            record = engine.h2_query(
                request.p,
                parse_weight_input(text, request.p, request.twist),
                route=request.route,
                explain=request.explain,
            )
            self.emit(record, stdout)
            disagreement = disagreement or record.agree is False
        self.collect(engine)
        if request.strict and disagreement:
            return 2
        return 0
