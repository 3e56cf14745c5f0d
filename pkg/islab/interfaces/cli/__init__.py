"""
CLI Interface - Command-line tools for islab.

Provides commands for:
- Running and testing instruction sequences
- Linting and exhaustive verification
- Fault certification, repair search and adequacy
- Semantics variant enumeration and discrimination
- Process reports over effectuation ledgers
"""

from .main import app, main

__all__ = ["app", "main"]
