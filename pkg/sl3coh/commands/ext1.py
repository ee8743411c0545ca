"""
Ext1 Command-class definition
"""

from typing import TextIO
import json
import argparse

from sl3coh.handlers import get_ext1_handler
from sl3coh.models import (
    Ext1Request, Weight, parse_weight_input, regime_of,
)
from sl3coh.weight_lattice import check_prime
from sl3coh.commands.command import Command


class Ext1Command(Command):
    """Command for Ext1-queries and table scans."""

    NAME = "ext1"
    HELP = "compute dim Ext1_G(L(row), L(mu)) or scan the Ext1 tables"
    REQUEST = Ext1Request
    ARGUMENTS = {
        "p": "p",
        "row": "row",
        "mu": "mu",
        "twist": "twist",
        "scan": "scan",
        "max_len": "maxLen",
    }

    def get_handler(self):
        return get_ext1_handler()

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=int, required=True, help="prime")
        parser.add_argument(
            "--row", help="first argument: (0,0), (1,0), (0,1) or (1,1)"
        )
        parser.add_argument(
            "--mu", help="weight 'a,b' or factors 'a0,b0;a1,b1;...'"
        )
        parser.add_argument(
            "--twist", type=int, help="additional Frobenius twist for MU"
        )
        parser.add_argument(
            "--scan", action="store_true",
            help="scan all MU with at most MAX_LEN digits for table defects",
        )
        parser.add_argument("--max-len", type=int, help="digits scanned")

    def execute(
        self, request: Ext1Request, args: argparse.Namespace, stdout: TextIO
    ) -> int:
        engine = self.make_engine(args)
        if request.scan:
            check_prime(request.p)
            result = engine.ext1.scan(request.p, request.max_len)
            result["dual_closure_defects"] = engine.ext1.dual_closure_defects(
                regime_of(request.p)
            )
            result["p"] = request.p
            result["max_len"] = request.max_len
            print(json.dumps(result, indent=2, sort_keys=True), file=stdout)
        else:
            if request.row is None or request.mu is None:
                raise ValueError(
                    "Arguments '--row' and '--mu' are required unless "
                    + "'--scan' is given."
                )
            self.emit(
                engine.ext1_query(
                    request.p,
                    Weight.parse(request.row),
                    parse_weight_input(request.mu, request.p, request.twist),
                ),
                stdout,
            )
        self.collect(engine)
        return 0
