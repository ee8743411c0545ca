"""
- sl3coh -
Computes the second cohomology H^2(G, V) of G = SL3 in characteristic p
with coefficients in a simple module V along two independent routes (a
table-driven spectral-sequence pipeline and a classification against
the known families of non-vanishing H^2) and cross-checks them.
"""

from typing import Optional, TextIO
import sys
import argparse

from dcm_common import LoggingContext as Context, Logger

from sl3coh.config import AppConfig
from sl3coh.components import Engine
from sl3coh.commands import COMMANDS


class UsageError(Exception):
    """Raised on malformed command line arguments."""


class ArgumentParser(argparse.ArgumentParser):
    """`argparse.ArgumentParser` raising `UsageError` instead of exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def engine_factory(config: AppConfig, errata: Optional[bool] = None) -> Engine:
    """
    Returns an `Engine` for `config`.

    Keyword arguments:
    config -- app config derived from `AppConfig`
    errata -- whether to apply the errata overlay; `None` uses
              `config.ERRATA_ACTIVE`
              (default None)
    """
    return Engine(
        config.DATA_DIR,
        config.ERRATA_ACTIVE if errata is None else errata,
        config.MAX_DIGITS,
    )


def app_factory(config: AppConfig) -> ArgumentParser:
    """
    Returns the command line parser with all commands registered.

    config -- app config derived from `AppConfig`
    """
    parser = ArgumentParser(
        prog="sl3coh",
        description="Second cohomology of SL3 in characteristic p.",
    )
    parser.add_argument(
        "--errata", choices=("on", "off"),
        help="apply the errata overlay of the Ext1 table "
        + f"(default {'on' if config.ERRATA_ACTIVE else 'off'})",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="also print INFO logs"
    )
    subparsers = parser.add_subparsers(dest="name", required=True)
    for command_class in COMMANDS:
        command = command_class(
            config, lambda errata: engine_factory(config, errata)
        )
        subparser = subparsers.add_parser(command.NAME, help=command.HELP)
        command.configure(subparser)
        subparser.set_defaults(command=command)
    return parser


def print_log(log: Logger, verbose: bool = False) -> None:
    """Writes `log` to stderr (INFO only if `verbose`)."""
    contexts = [Context.ERROR, Context.WARNING]
    if verbose:
        contexts.append(Context.INFO)
    for context in contexts:
        if context in log:
            print(str(log.pick(context)), file=sys.stderr)


def run(
    parser: ArgumentParser,
    argv: Optional[list[str]] = None,
    stdout: Optional[TextIO] = None,
) -> int:
    """
    Runs the command selected in `argv` and returns the exit status:
    0 on success, 1 on usage and input errors, 2 if '--strict' routes
    disagree.

    Keyword arguments:
    parser -- parser returned by `app_factory`
    argv -- command line arguments (default `sys.argv[1:]`)
            (default None)
    stdout -- stream for data payloads (default `sys.stdout`)
              (default None)
    """
    try:
        args = parser.parse_args(argv)
    except UsageError as exc_info:
        print(exc_info, file=sys.stderr)
        return 1
    command = args.command
    try:
        status = command.run(args, stdout or sys.stdout)
    except (ValueError, RuntimeError, OSError) as exc_info:
        print(f"sl3coh: error: {exc_info}", file=sys.stderr)
        status = 1
    print_log(command.log, args.verbose)
    return status


def main() -> int:
    """Console-script entry point."""
    return run(app_factory(AppConfig()))
