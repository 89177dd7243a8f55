"""
One command class per CLI subcommand.
"""

from .base_command import BaseCommand, EXIT_OK, EXIT_FAILED, EXIT_USAGE
from .basis_command import BasisCommand
from .matrix_command import MatrixCommand
from .series_command import SeriesCommand
from .aux_command import AuxCommand
from .verify_command import VerifyCommand
from .check_command import CheckCommand

COMMANDS = {
    "basis": BasisCommand,
    "matrix": MatrixCommand,
    "series": SeriesCommand,
    "aux": AuxCommand,
    "verify": VerifyCommand,
    "check": CheckCommand,
}

__all__ = [
    "BaseCommand",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_USAGE",
    "BasisCommand",
    "MatrixCommand",
    "SeriesCommand",
    "AuxCommand",
    "VerifyCommand",
    "CheckCommand",
    "COMMANDS",
]
