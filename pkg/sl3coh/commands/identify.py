"""
Identify Command-class definition
"""

from typing import TextIO
import json
import argparse

from sl3coh.commands.command import Command


class IdentifyCommand(Command):
    """Command printing the self-description of the configuration."""

    NAME = "identify"
    HELP = "print tool and table versions and settings as JSON"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, request, args: argparse.Namespace, stdout: TextIO) -> int:
        print(
            json.dumps(self.config.SELF_DESCRIPTION, indent=2, sort_keys=True),
            file=stdout,
        )
        return 0
