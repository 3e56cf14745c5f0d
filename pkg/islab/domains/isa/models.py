"""
ISA Models - Data types for instruction sequences, fragments and replacements.
"""

from __future__ import annotations

import hashlib
import re
from enum import Enum

from pydantic import BaseModel, Field, model_validator

FOCUS_PATTERN = re.compile(r"[a-z][a-z0-9_]*")
METHODS = ("get", "set:0", "set:1", "negate")


class InstructionKind(str, Enum):
    """Primitive instruction kinds."""

    BASIC = "basic"
    POS_TEST = "pos_test"
    NEG_TEST = "neg_test"
    FWD_JUMP = "fwd_jump"
    BWD_JUMP = "bwd_jump"
    HALT = "halt"


class Instruction(BaseModel):
    """A single primitive instruction."""

    kind: InstructionKind
    focus: str | None = None
    method: str | None = None
    offset: int | None = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_operands(self) -> Instruction:
        """Each kind carries exactly the operands it needs."""
        if self.kind in (InstructionKind.FWD_JUMP, InstructionKind.BWD_JUMP):
            if self.offset is None or self.offset < 0:
                raise ValueError("jump offset must be a non-negative integer")
            if self.focus is not None or self.method is not None:
                raise ValueError("jumps take no focus or method")
        elif self.kind == InstructionKind.HALT:
            if self.focus is not None or self.method is not None or self.offset is not None:
                raise ValueError("halt takes no operands")
        else:
            if self.focus is None or not FOCUS_PATTERN.fullmatch(self.focus):
                raise ValueError(f"invalid focus: {self.focus!r}")
            if self.method not in METHODS:
                raise ValueError(f"invalid method: {self.method!r}")
            if self.offset is not None:
                raise ValueError("basic and test instructions take no offset")
        return self

    @classmethod
    def basic(cls, focus: str, method: str) -> Instruction:
        return cls(kind=InstructionKind.BASIC, focus=focus, method=method)

    @classmethod
    def pos_test(cls, focus: str, method: str) -> Instruction:
        return cls(kind=InstructionKind.POS_TEST, focus=focus, method=method)

    @classmethod
    def neg_test(cls, focus: str, method: str) -> Instruction:
        return cls(kind=InstructionKind.NEG_TEST, focus=focus, method=method)

    @classmethod
    def fwd_jump(cls, offset: int) -> Instruction:
        return cls(kind=InstructionKind.FWD_JUMP, offset=offset)

    @classmethod
    def bwd_jump(cls, offset: int) -> Instruction:
        return cls(kind=InstructionKind.BWD_JUMP, offset=offset)

    @classmethod
    def halt(cls) -> Instruction:
        return cls(kind=InstructionKind.HALT)

    @property
    def is_jump(self) -> bool:
        return self.kind in (InstructionKind.FWD_JUMP, InstructionKind.BWD_JUMP)

    @property
    def is_test(self) -> bool:
        return self.kind in (InstructionKind.POS_TEST, InstructionKind.NEG_TEST)

    @property
    def uses_service(self) -> bool:
        """Basic actions and tests call the register service."""
        return self.kind in (
            InstructionKind.BASIC,
            InstructionKind.POS_TEST,
            InstructionKind.NEG_TEST,
        )

    def jump_target(self, position: int) -> int | None:
        """Static target of a jump at ``position``; None for non-jumps."""
        if self.offset is None:
            return None
        if self.kind == InstructionKind.FWD_JUMP:
            return position + self.offset
        return position - self.offset

    def render(self) -> str:
        """Canonical token."""
        if self.kind == InstructionKind.HALT:
            return "!"
        if self.kind == InstructionKind.FWD_JUMP:
            return f"#{self.offset}"
        if self.kind == InstructionKind.BWD_JUMP:
            return f"\\#{self.offset}"
        prefix = {InstructionKind.POS_TEST: "+", InstructionKind.NEG_TEST: "-"}.get(self.kind, "")
        return f"{prefix}{self.focus}.{self.method}"

    def __str__(self) -> str:
        return self.render()


class InstructionSequence(BaseModel):
    """Finite, non-empty, 1-indexed list of primitive instructions."""

    instructions: tuple[Instruction, ...] = Field(min_length=1)

    model_config = {"frozen": True}

    def __len__(self) -> int:
        return len(self.instructions)

    def at(self, position: int) -> Instruction:
        """Instruction at a 1-based position."""
        if not 1 <= position <= len(self.instructions):
            raise IndexError(f"position {position} outside 1..{len(self.instructions)}")
        return self.instructions[position - 1]

    def render(self) -> str:
        return "; ".join(ins.render() for ins in self.instructions)

    @property
    def registers(self) -> tuple[str, ...]:
        """Register names used by the sequence, in first-use order."""
        seen: dict[str, None] = {}
        for ins in self.instructions:
            if ins.focus is not None:
                seen.setdefault(ins.focus, None)
        return tuple(seen)

    @property
    def program_id(self) -> str:
        """Stable short content hash of the canonical text."""
        return hashlib.sha256(self.render().encode("utf-8")).hexdigest()[:12]

    def __str__(self) -> str:
        return self.render()


class Fragment(BaseModel):
    """
    An n-located candidate fault: sorted, pairwise disjoint 1-based ranges.

    Adjacent ranges are allowed, so ``{[1,1],[2,2]}`` and ``{[1,2]}`` are
    different fragments.
    """

    parts: tuple[tuple[int, int], ...] = Field(min_length=1)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_parts(self) -> Fragment:
        previous_hi = 0
        for lo, hi in self.parts:
            if lo < 1 or hi < lo:
                raise ValueError(f"invalid range {lo}-{hi}")
            if lo <= previous_hi:
                raise ValueError("ranges must be sorted and pairwise disjoint")
            previous_hi = hi
        return self

    @classmethod
    def of(cls, *parts: tuple[int, int]) -> Fragment:
        return cls(parts=tuple(parts))

    @property
    def arity(self) -> int:
        return len(self.parts)

    @property
    def total_length(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.parts)

    @property
    def positions(self) -> frozenset[int]:
        return frozenset(p for lo, hi in self.parts for p in range(lo, hi + 1))

    def fits(self, length: int) -> bool:
        """Whether every index lies within 1..length."""
        return self.parts[-1][1] <= length

    def overlaps(self, other: Fragment) -> bool:
        return not self.positions.isdisjoint(other.positions)

    def contained_in(self, other: Fragment) -> bool:
        """Part-wise containment: every part of self lies inside one part of other."""
        return all(
            any(olo <= lo and hi <= ohi for olo, ohi in other.parts) for lo, hi in self.parts
        )

    def render(self) -> str:
        return ",".join(str(lo) if lo == hi else f"{lo}-{hi}" for lo, hi in self.parts)

    def __str__(self) -> str:
        return self.render()


class Replacement(BaseModel):
    """Candidate repair: one instruction list per fragment part (may be empty)."""

    parts: tuple[tuple[Instruction, ...], ...]

    model_config = {"frozen": True}

    @property
    def arity(self) -> int:
        return len(self.parts)

    @property
    def total_length(self) -> int:
        return sum(len(part) for part in self.parts)

    def render(self) -> str:
        return " | ".join("; ".join(ins.render() for ins in part) for part in self.parts)

    def __str__(self) -> str:
        return self.render()
