"""
Configuration - Laboratory settings and error taxonomy.
"""

from .errors import (
    ErrorCode,
    FaultError,
    IslabError,
    LedgerError,
    ProgramSyntaxError,
    SemanticsError,
    SequenceError,
    TestingError,
    ViewError,
)
from .settings import Settings, get_settings

__all__ = [
    # Settings
    "Settings",
    "get_settings",
    # Errors
    "ErrorCode",
    "IslabError",
    "ProgramSyntaxError",
    "SequenceError",
    "SemanticsError",
    "TestingError",
    "LedgerError",
    "FaultError",
    "ViewError",
]
