"""
Command interface-definition
"""

from typing import Callable, Optional, TextIO, Iterator
import abc
import json
import argparse
from contextlib import contextmanager

import jsonschema
from data_plumber_http.settings import Responses
from dcm_common import Logger

from sl3coh.config import AppConfig
from sl3coh.components import Engine
from sl3coh.models import QueryRecord


class Command(metaclass=abc.ABCMeta):
    """
    Interface for commands of the command line interface.

    Requirements for qualification as `Command`:
    NAME -- property (string); name of the command
    HELP -- property (string); one-line description
    configure -- register arguments with a sub-parser
    execute -- perform the command for a validated request

    Methods:
    to_json -- convert parsed arguments into handler input
    run -- validate arguments and execute

    Keyword arguments:
    config -- app config derived from `AppConfig`
    engine_factory -- callable returning an `Engine` for a given errata
                      setting (`None` means configured default)
    """

    # setup requirements for an object to be regarded
    # as implementing the Interface
    @classmethod
    def __subclasshook__(cls, subclass):
        return (
            hasattr(subclass, "NAME")
            and hasattr(subclass, "execute")
            and callable(subclass.execute)
            or NotImplemented
        )

    # setup checks for missing implementation/definition of properties
    @property
    @abc.abstractmethod
    def NAME(self) -> str:
        """
        Name of this `Command`.
        """
        raise NotImplementedError(
            f"Class {self.__class__.__name__} does not define property "
            + "'NAME'."
        )

    @property
    @abc.abstractmethod
    def HELP(self) -> str:
        """
        One-line description of this `Command`.
        """
        raise NotImplementedError(
            f"Class {self.__class__.__name__} does not define property "
            + "'HELP'."
        )

    # request model; `None` for commands without arguments
    REQUEST: Optional[type] = None

    def __init__(
        self,
        config: AppConfig,
        engine_factory: Callable[[Optional[bool]], Engine],
    ) -> None:
        self.config = config
        self.engine_factory = engine_factory
        self.log = Logger(default_origin=f"Command '{self.NAME}'")

    @abc.abstractmethod
    def configure(self, parser: argparse.ArgumentParser) -> None:
        """
        Register arguments of this command with `parser`.

        Keyword arguments:
        parser -- sub-parser of this command
        """
        raise NotImplementedError(
            f"Class {self.__class__.__name__} does not define method "
            + "'configure'."
        )

    @abc.abstractmethod
    def execute(self, request, args: argparse.Namespace, stdout: TextIO) -> int:
        """
        Perform the command and return the exit status.

        Keyword arguments:
        request -- validated request model
        args -- parsed arguments (global flags)
        stdout -- stream for data payloads
        """
        raise NotImplementedError(
            f"Class {self.__class__.__name__} does not define method "
            + "'execute'."
        )

    # mapping of argument destinations to handler input keys
    ARGUMENTS: dict[str, str] = {}

    def get_handler(self):
        """Returns the input handler of this command (or `None`)."""
        return None

    def to_json(self, args: argparse.Namespace) -> dict:
        """Returns handler input from `args`; unset arguments are omitted."""
        return {
            key: getattr(args, dest)
            for dest, key in self.ARGUMENTS.items()
            if getattr(args, dest, None) is not None
        }

    def run(self, args: argparse.Namespace, stdout: TextIO) -> int:
        """
        Validate `args` and execute. Returns the exit status.

        Raises `ValueError` if the handler rejects the arguments.
        """
        self.log = Logger(default_origin=f"Command '{self.NAME}'")
        handler = self.get_handler()
        request = None
        if handler is not None:
            output = handler.run(json=self.to_json(args))
            if output.last_status != Responses.GOOD.status:
                raise ValueError(
                    f"Invalid arguments for '{self.NAME}': "
                    + f"{output.last_message}"
                )
            request = self.REQUEST(**output.data.value)
        return self.execute(request, args, stdout)

    def make_engine(self, args: argparse.Namespace) -> Engine:
        """Returns `Engine` honoring the global '--errata' flag."""
        errata = getattr(args, "errata", None)
        return self.engine_factory(None if errata is None else errata == "on")

    def collect(self, engine: Engine) -> None:
        """Merges the logs of `engine` into `self.log`."""
        self.log.merge(engine.collect_log())

    def validate(self, record: QueryRecord) -> dict:
        """
        Returns the payload of `record`, validated against the record
        schema if configured.
        """
        payload = record.compact_json
        if self.config.VALIDATE_RECORDS:
            try:
                jsonschema.validate(payload, self.config.SCHEMA)
            except jsonschema.ValidationError as exc_info:
                raise RuntimeError(
                    "Emitted record violates the record schema: "
                    + f"{exc_info.message}"
                ) from exc_info
        return payload

    def emit(self, record: QueryRecord, stdout: TextIO) -> None:
        """Writes `record` as a single JSON line."""
        print(json.dumps(self.validate(record), sort_keys=True), file=stdout)


@contextmanager
def open_output(path: Optional[str], stdout: TextIO) -> Iterator[TextIO]:
    """
    Yields a stream writing to `path` or `stdout` if `path` is `None`.
    """
    if path is None:
        yield stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as file:
        yield file

