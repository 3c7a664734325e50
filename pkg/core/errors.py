"""Exception hierarchy shared by the supercap packages.

Axiom violations found by ``validate()`` are reported as data; everything in
this module signals that an operation could not be carried out.
"""

from __future__ import annotations

from typing import Any, Optional


class SupercapError(Exception):
    """Root of every error raised on purpose by supercap."""


class InputError(SupercapError, ValueError):
    """Malformed indices, dimension mismatches, bad parameters or unknown tags."""


class InterchangeError(InputError):
    """A file could not be parsed. Carries a 1-based line/column when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}")


class NotGradedError(InputError):
    """A vector that should be homogeneous mixes even and odd coordinates."""


class NotAnIdealError(SupercapError, ValueError):
    """A subspace used as an ideal is not closed under bracketing with the algebra."""


class InvalidAlgebraError(SupercapError, ValueError):
    """An operation needs a valid Lie superalgebra and got one violating the axioms."""

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class PreconditionError(SupercapError, ValueError):
    """A documented precondition of an operation does not hold."""


class ContractViolation(SupercapError, ArithmeticError):
    """A formula was applied outside its contract (e.g. a negative corank)."""


class OracleLimitError(SupercapError):
    """The configured generator, class or dimension limits would be exceeded."""


class ClassBoundError(SupercapError):
    """The truncation class is too small for the presented algebra."""


class ConsistencyError(SupercapError, AssertionError):
    """An internal double check disagreed with the main computation."""


__all__ = [
    "SupercapError",
    "InputError",
    "InterchangeError",
    "NotGradedError",
    "NotAnIdealError",
    "InvalidAlgebraError",
    "PreconditionError",
    "ContractViolation",
    "OracleLimitError",
    "ClassBoundError",
    "ConsistencyError",
]
