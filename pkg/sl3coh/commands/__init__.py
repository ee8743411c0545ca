from .command import Command, open_output
from .h2 import H2Command
from .table import TableCommand, COLUMNS
from .crosscheck import CrosscheckCommand
from .linkage import LinkageCommand
from .ext1 import Ext1Command
from .patterns import PatternsCommand
from .identify import IdentifyCommand

COMMANDS = [
    H2Command, TableCommand, CrosscheckCommand, LinkageCommand,
    Ext1Command, PatternsCommand, IdentifyCommand,
]

__all__ = [
    "Command", "open_output", "COMMANDS",
    "H2Command", "TableCommand", "COLUMNS", "CrosscheckCommand",
    "LinkageCommand", "Ext1Command", "PatternsCommand", "IdentifyCommand",
]
