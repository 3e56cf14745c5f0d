"""
Program Text - Parsing and rendering of instruction sequences, fragments and replacements.

Program format: instructions separated by ``;`` and/or newlines, ``%`` starts a
comment running to the end of the line. Tokens::

    !            termination
    #N           forward jump by N
    \\#N          backward jump by N
    [+|-]r.m     basic action / positive test / negative test on register r,
                 method m in {get, set:0, set:1, negate}
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterator

from pydantic import ValidationError

from islab.config.errors import ErrorCode, ProgramSyntaxError, SequenceError

from .models import Fragment, Instruction, InstructionKind, InstructionSequence, Replacement

logger = logging.getLogger(__name__)

__all__ = [
    "parse_instruction",
    "parse_sequence",
    "render_sequence",
    "parse_fragment",
    "render_fragment",
    "parse_replacement",
]

_JUMP = re.compile(r"(\\?)#(-?\d+)")
_ACTION = re.compile(r"([+-]?)([a-z][a-z0-9_]*)\.(get|set:0|set:1|negate)")
_RANGE = re.compile(r"(\d+)(?:-(\d+))?")


def _tokens(text: str) -> Iterator[tuple[str, int, int]]:
    """Yield (token, line, column) with comments and blanks removed."""
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("%", 1)[0]
        start = 0
        for chunk in line.split(";"):
            stripped = chunk.strip()
            if stripped:
                column = start + (len(chunk) - len(chunk.lstrip())) + 1
                yield stripped, line_no, column
            start += len(chunk) + 1


def parse_instruction(token: str, line: int = 1, column: int = 1) -> Instruction:
    """Parse a single canonical token."""
    if token == "!":
        return Instruction.halt()

    jump = _JUMP.fullmatch(token)
    if jump:
        offset = int(jump.group(2))
        if offset < 0:
            raise ProgramSyntaxError(f"negative jump offset in {token!r}", line, column)
        if jump.group(1):
            return Instruction.bwd_jump(offset)
        return Instruction.fwd_jump(offset)

    action = _ACTION.fullmatch(token)
    if action:
        sign, focus, method = action.groups()
        kind = {
            "+": InstructionKind.POS_TEST,
            "-": InstructionKind.NEG_TEST,
        }.get(sign, InstructionKind.BASIC)
        return Instruction(kind=kind, focus=focus, method=method)

    raise ProgramSyntaxError(f"malformed instruction {token!r}", line, column)


def parse_sequence(text: str) -> InstructionSequence:
    """
    Parse canonical program text.

    Args:
        text: Program text

    Returns:
        The instruction sequence, positions assigned left to right from 1

    Raises:
        ProgramSyntaxError: Malformed token (with line and column)
        SequenceError: No instructions after removing comments and whitespace
    """
    instructions = [parse_instruction(tok, line, col) for tok, line, col in _tokens(text)]
    if not instructions:
        raise SequenceError("program is empty", code=ErrorCode.EMPTY_PROGRAM)
    logger.debug("Parsed %d instructions", len(instructions))
    return InstructionSequence(instructions=tuple(instructions))


def render_sequence(x: InstructionSequence) -> str:
    """Canonical text: tokens joined by semicolon plus space."""
    return x.render()


def parse_fragment(text: str) -> Fragment:
    """Parse ``lo-hi(,lo-hi)*``; a bare ``n`` means ``n-n``."""
    parts: list[tuple[int, int]] = []
    for chunk in text.split(","):
        match = _RANGE.fullmatch(chunk.strip())
        if not match:
            raise SequenceError(f"malformed fragment range {chunk.strip()!r}")
        lo = int(match.group(1))
        hi = int(match.group(2)) if match.group(2) is not None else lo
        parts.append((lo, hi))
    try:
        return Fragment(parts=tuple(parts))
    except ValidationError as e:
        raise SequenceError(f"invalid fragment {text!r}: {e.errors()[0]['msg']}") from e


def render_fragment(f: Fragment) -> str:
    return f.render()


def parse_replacement(text: str) -> Replacement:
    """
    Parse replacement text: parts separated by ``|``, instructions by ``;``.

    An empty part denotes deletion, so ``"+i.get |"`` has two parts, the second empty.
    """
    parts = []
    for part in text.split("|"):
        parts.append(tuple(parse_instruction(tok, line, col) for tok, line, col in _tokens(part)))
    return Replacement(parts=tuple(parts))
