"""
Semantics Models - Variants, machine states, outcomes and traces.
"""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, field_validator

from islab.domains.isa import Instruction


class ExcessPolicy(str, Enum):
    """Operational meaning of a program counter leaving 1..len."""

    DEADLOCK = "deadlock"  # incorrect termination without warning
    LIVELOCK = "livelock"  # perpetual idling
    ERROR = "error"  # incorrect termination with warning
    TERMINATE = "terminate"  # correct termination
    SKIP = "skip"  # idle step: retarget to the next position
    REJECT = "reject"  # static exclusion before any step


class SemanticsVariant(BaseModel):
    """Pair of excess policies, one per end of the instruction range."""

    low: ExcessPolicy = ExcessPolicy.DEADLOCK
    high: ExcessPolicy = ExcessPolicy.DEADLOCK

    model_config = {"frozen": True}

    @property
    def rejects_statically(self) -> bool:
        return ExcessPolicy.REJECT in (self.low, self.high)

    def render(self) -> str:
        return f"low={self.low.value},high={self.high.value}"

    def __str__(self) -> str:
        return self.render()


class MachineState(BaseModel):
    """Single-bit registers; unmapped registers read as 0."""

    registers: dict[str, int] = Field(default_factory=dict)

    model_config = {"frozen": True}

    @field_validator("registers")
    @classmethod
    def check_bits(cls, value: dict[str, int]) -> dict[str, int]:
        for name, bit in value.items():
            if bit not in (0, 1):
                raise ValueError(f"register {name} holds {bit}, expected 0 or 1")
        return value

    @classmethod
    def of(cls, **registers: int) -> MachineState:
        return cls(registers=registers)

    def get(self, name: str) -> int:
        return self.registers.get(name, 0)

    def key(self) -> tuple[tuple[str, int], ...]:
        """Order-independent identity used for hashing and comparisons."""
        return tuple(sorted(self.registers.items()))

    def render(self) -> str:
        return "{" + ",".join(f"{name}={bit}" for name, bit in self.key()) + "}"

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, MachineState):
            return self.key() == other.key()
        return NotImplemented

    def __str__(self) -> str:
        return self.render()


class OutcomeKind(str, Enum):
    """Categories of effectuation outcome."""

    TERMINATED = "terminated"
    ERROR_HALT = "error_halt"
    DEADLOCK = "deadlock"
    LIVELOCK = "livelock"
    BUDGET_EXHAUSTED = "budget_exhausted"
    STATICALLY_REJECTED = "statically_rejected"


_LABELS = {
    OutcomeKind.TERMINATED: "Terminated",
    OutcomeKind.ERROR_HALT: "ErrorHalt",
    OutcomeKind.DEADLOCK: "Deadlock",
    OutcomeKind.LIVELOCK: "Livelock",
    OutcomeKind.BUDGET_EXHAUSTED: "BudgetExhausted",
    OutcomeKind.STATICALLY_REJECTED: "StaticallyRejected",
}


class Outcome(BaseModel):
    """
    Result of one effectuation.

    ``steps`` is the step count for halting kinds, the detection step for
    Livelock, and the budget for BudgetExhausted. ``final`` is present for
    Terminated and ErrorHalt; ``position`` for StaticallyRejected.
    """

    kind: OutcomeKind
    steps: int = Field(ge=0)
    final: MachineState | None = None
    position: int | None = None

    model_config = {"frozen": True}

    @property
    def terminated(self) -> bool:
        return self.kind == OutcomeKind.TERMINATED

    @property
    def signature(self) -> tuple[str, int, tuple[tuple[str, int], ...] | None, int | None]:
        """Everything an observer of a black-box machine can see."""
        return (
            self.kind.value,
            self.steps,
            self.final.key() if self.final is not None else None,
            self.position,
        )

    def render(self) -> str:
        label = _LABELS[self.kind]
        if self.kind in (OutcomeKind.TERMINATED, OutcomeKind.ERROR_HALT):
            return f"{label} {self.final} steps={self.steps}"
        if self.kind == OutcomeKind.LIVELOCK:
            return f"{label} detected_at_step={self.steps}"
        if self.kind == OutcomeKind.BUDGET_EXHAUSTED:
            return f"{label} budget={self.steps}"
        if self.kind == OutcomeKind.STATICALLY_REJECTED:
            return f"{label} position={self.position}"
        return f"{label} steps={self.steps}"

    def __str__(self) -> str:
        return self.render()


class TraceStep(BaseModel):
    """One operational step. Idle steps carry no position or instruction."""

    step: int
    position: int | None
    instruction: Instruction | None
    state: MachineState

    model_config = {"frozen": True}

    def render(self) -> str:
        where = f"{self.position:>3} {self.instruction}" if self.position is not None else "  - idle"
        return f"{self.step:>5} {where} {self.state}"


class Trace(BaseModel):
    """Ordered steps of one effectuation, indices consecutive from 1."""

    steps: tuple[TraceStep, ...] = ()

    model_config = {"frozen": True}

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def positions(self) -> frozenset[int]:
        """Positions exercised by the run."""
        return frozenset(s.position for s in self.steps if s.position is not None)


class StaticCheckResult(BaseModel):
    """Jumps whose static target lies outside 1..len, split by end."""

    low_violations: tuple[int, ...] = ()
    high_violations: tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.low_violations and not self.high_violations

    @property
    def violations(self) -> tuple[int, ...]:
        return tuple(sorted(self.low_violations + self.high_violations))
