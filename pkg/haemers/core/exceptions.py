"""
Error hierarchy shared by the library and the command line.

Every error carries the process exit status the CLI reports for it, so the
commands never need to map exception types themselves.
"""
from typing import Optional

from haemers.constants.cli import ExitCode


class HaemersError(Exception):
    """Base error. ``detail`` is the human readable message."""

    exit_code: int = ExitCode.USAGE

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class BadParameter(HaemersError):
    pass


class IndexOutOfRange(BadParameter):
    pass


class AmbientMismatch(HaemersError):
    pass


class FieldMismatch(HaemersError):
    pass


class CapExceeded(HaemersError):
    """A configured size cap (matrix cells, vertices, candidate pool) was hit."""


# Name used by the graph, oracle and LP caps.
TooLarge = CapExceeded


class UnknownVertex(HaemersError):
    pass


class GraphMismatch(HaemersError):
    pass


class DomainError(HaemersError):
    pass


class DivisionByZero(HaemersError):
    pass


class ParseError(HaemersError):
    pass


class InvalidInput(HaemersError):
    """The input representation does not pass verification."""

    exit_code = ExitCode.FALSE


class InvariantViolation(HaemersError):
    """An identity that must hold by construction failed."""

    exit_code = ExitCode.FALSE


class BudgetExhausted(HaemersError):
    """Search stopped before completion; the answer is unknown."""

    exit_code = ExitCode.INCONCLUSIVE

    def __init__(self, detail: str, nodes: int = 0):
        super().__init__(detail)
        self.nodes = nodes
