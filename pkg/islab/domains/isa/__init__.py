"""
ISA Domain - Instruction sequence syntax and transformation.

This domain handles:
- Parsing and rendering program text
- Fragment extraction and substitution (x -> x')
- Enumeration of n-located fragments
- Seeded random program generation
"""

from .fragments import check_fragment, enumerate_fragments, extract, substitute
from .generator import random_program
from .models import (
    FOCUS_PATTERN,
    METHODS,
    Fragment,
    Instruction,
    InstructionKind,
    InstructionSequence,
    Replacement,
)
from .parser import (
    parse_fragment,
    parse_instruction,
    parse_replacement,
    parse_sequence,
    render_fragment,
    render_sequence,
)

__all__ = [
    # Models
    "FOCUS_PATTERN",
    "METHODS",
    "Instruction",
    "InstructionKind",
    "InstructionSequence",
    "Fragment",
    "Replacement",
    # Text
    "parse_instruction",
    "parse_sequence",
    "render_sequence",
    "parse_fragment",
    "render_fragment",
    "parse_replacement",
    # Transformation
    "check_fragment",
    "extract",
    "substitute",
    "enumerate_fragments",
    "random_program",
]
