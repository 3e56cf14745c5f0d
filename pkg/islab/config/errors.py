"""
Error Taxonomy - Consistent error codes across the laboratory.

Usage:
    from islab.config.errors import ErrorCode, IslabError

    raise IslabError(ErrorCode.SEQUENCE_ARITY_MISMATCH, "replacement has 1 part, fragment has 2")

Verdicts (Fail, Rejection, Incorrect, NotAdequate) are values; these exceptions
are reserved for malformed input and violated preconditions.
"""

from __future__ import annotations

from enum import Enum
from typing import Any


class ErrorCode(str, Enum):
    """Standardized error codes for machine-readable error reports."""

    # Instruction sequence syntax and transformation
    SYNTAX_ERROR = "SYNTAX_ERROR"
    EMPTY_PROGRAM = "EMPTY_PROGRAM"
    SEQUENCE_ARITY_MISMATCH = "SEQUENCE_ARITY_MISMATCH"
    SEQUENCE_FRAGMENT_OUT_OF_BOUNDS = "SEQUENCE_FRAGMENT_OUT_OF_BOUNDS"
    SEQUENCE_INVALID_FRAGMENT = "SEQUENCE_INVALID_FRAGMENT"
    SEQUENCE_EMPTY_RESULT = "SEQUENCE_EMPTY_RESULT"

    # Semantics
    SEMANTICS_INVALID_BUDGET = "SEMANTICS_INVALID_BUDGET"
    SEMANTICS_INVALID_VARIANT = "SEMANTICS_INVALID_VARIANT"

    # Testing
    TESTING_PRECONDITION = "TESTING_PRECONDITION"
    TESTING_DOMAIN_TOO_LARGE = "TESTING_DOMAIN_TOO_LARGE"
    TESTING_INVALID_FORMAT = "TESTING_INVALID_FORMAT"
    LEDGER_MISSING_PURPOSE = "LEDGER_MISSING_PURPOSE"
    LEDGER_INVALID_LINE = "LEDGER_INVALID_LINE"

    # Faults
    FAULT_STALE_FAILURE = "FAULT_STALE_FAILURE"
    FAULT_NO_FAILURE = "FAULT_NO_FAILURE"
    FAULT_OVERLAP = "FAULT_OVERLAP"
    FAULT_EMPTY_ALPHABET = "FAULT_EMPTY_ALPHABET"
    FAULT_UNKNOWN_PROFILE = "FAULT_UNKNOWN_PROFILE"

    # Views
    VIEWS_UNKNOWN_RULE = "VIEWS_UNKNOWN_RULE"
    VIEWS_DOMAIN_MISMATCH = "VIEWS_DOMAIN_MISMATCH"


class IslabError(Exception):
    """Base exception with error code support."""

    def __init__(
        self,
        code: ErrorCode,
        message: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.code = code
        self.message = message
        self.details = details or {}
        super().__init__(f"[{code.value}] {message}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to a report-friendly dictionary."""
        return {
            "code": self.code.value,
            "message": self.message,
            "details": self.details,
        }


# Domain-specific exceptions for cleaner imports
class ProgramSyntaxError(IslabError):
    """Malformed program text, with the offending location."""

    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(
            ErrorCode.SYNTAX_ERROR,
            f"{message} (line {line}, column {column})",
            {"line": line, "column": column},
        )


class SequenceError(IslabError):
    """Instruction sequence transformation errors."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: ErrorCode = ErrorCode.SEQUENCE_INVALID_FRAGMENT,
    ) -> None:
        super().__init__(code, message, details)


class SemanticsError(IslabError):
    """Effectuation and variant errors."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: ErrorCode = ErrorCode.SEMANTICS_INVALID_BUDGET,
    ) -> None:
        super().__init__(code, message, details)


class TestingError(IslabError):
    """Test harness and file format errors."""

    __test__ = False

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: ErrorCode = ErrorCode.TESTING_PRECONDITION,
    ) -> None:
        super().__init__(code, message, details)


class LedgerError(IslabError):
    """Effectuation ledger errors."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: ErrorCode = ErrorCode.LEDGER_INVALID_LINE,
    ) -> None:
        super().__init__(code, message, details)


class FaultError(IslabError):
    """Fault engine errors."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: ErrorCode = ErrorCode.FAULT_STALE_FAILURE,
    ) -> None:
        super().__init__(code, message, details)


class ViewError(IslabError):
    """Non-mechanical view errors."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: ErrorCode = ErrorCode.VIEWS_UNKNOWN_RULE,
    ) -> None:
        super().__init__(code, message, details)
