"""
Testing Models - Test cases, verdicts, specifications and effectuation records.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from datetime import datetime, timezone
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

UTC = timezone.utc  # alias of datetime.UTC (3.11+), kept for Python 3.10

from islab.domains.semantics import MachineState, Outcome, OutcomeKind

# --- Oracles ---


class AcceptancePredicate(BaseModel):
    """
    Conjunction of ``reg=bit`` constraints over a final state.

    No constraints is the wildcard ``any``: every terminal state is accepted.
    """

    constraints: tuple[tuple[str, int], ...] = ()

    model_config = {"frozen": True}

    @field_validator("constraints")
    @classmethod
    def normalize(cls, value: tuple[tuple[str, int], ...]) -> tuple[tuple[str, int], ...]:
        names = [name for name, _ in value]
        if len(names) != len(set(names)):
            raise ValueError(f"register constrained twice in {value}")
        if any(bit not in (0, 1) for _, bit in value):
            raise ValueError(f"constraint bits must be 0 or 1: {value}")
        return tuple(sorted(value))

    @classmethod
    def wildcard(cls) -> AcceptancePredicate:
        return cls()

    @classmethod
    def of(cls, **constraints: int) -> AcceptancePredicate:
        return cls(constraints=tuple(constraints.items()))

    @property
    def is_wildcard(self) -> bool:
        return not self.constraints

    def accepts(self, final: MachineState) -> bool:
        return all(final.get(name) == bit for name, bit in self.constraints)

    def render(self) -> str:
        if self.is_wildcard:
            return "any"
        return ",".join(f"{name}={bit}" for name, bit in self.constraints)

    def __str__(self) -> str:
        return self.render()


# --- Test cases and results ---


class TestCase(BaseModel):
    """The triple (input, acceptance, step bound), named, independent of any program."""

    __test__ = False

    name: str
    input: MachineState = Field(default_factory=MachineState)
    accept: AcceptancePredicate = Field(default_factory=AcceptancePredicate)
    step_bound: int = Field(ge=1)
    step_bound_defaulted: bool = False

    model_config = {"frozen": True}

    def render(self) -> str:
        assignments = ",".join(f"{name}={bit}" for name, bit in self.input.key())
        return f"case {self.name}: in {assignments} ; expect {self.accept} ; k {self.step_bound}"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class FailReason(str, Enum):
    """Why a confirmation test failed."""

    TERMINATED_OUTSIDE_U = "terminated-outside-U"
    DEADLOCK = "deadlock"
    ERROR_HALT = "error-halt"
    LIVELOCK = "livelock"
    BUDGET_EXHAUSTED = "budget-exhausted-after-k"
    STATICALLY_REJECTED = "statically-rejected"


FAIL_REASONS: dict[OutcomeKind, FailReason] = {
    OutcomeKind.TERMINATED: FailReason.TERMINATED_OUTSIDE_U,
    OutcomeKind.DEADLOCK: FailReason.DEADLOCK,
    OutcomeKind.ERROR_HALT: FailReason.ERROR_HALT,
    OutcomeKind.LIVELOCK: FailReason.LIVELOCK,
    OutcomeKind.BUDGET_EXHAUSTED: FailReason.BUDGET_EXHAUSTED,
    OutcomeKind.STATICALLY_REJECTED: FailReason.STATICALLY_REJECTED,
}


class TestResult(BaseModel):
    """Verdict of one confirmation test."""

    __test__ = False

    case_name: str
    verdict: Verdict
    reason: FailReason | None = None
    outcome: Outcome
    steps_observed: int = Field(ge=0)
    positions: frozenset[int] = frozenset()
    step_bound_defaulted: bool = False

    model_config = {"frozen": True}

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def render(self) -> str:
        marker = " k=defaulted" if self.step_bound_defaulted else ""
        if self.passed:
            return f"PASS {self.case_name} {self.outcome}{marker}"
        assert self.reason is not None
        return f"FAIL {self.case_name} reason={self.reason.value} {self.outcome}{marker}"


class SuiteResult(BaseModel):
    """Per-case results in suite order plus summary counts."""

    results: tuple[TestResult, ...] = ()

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    @property
    def failures(self) -> tuple[TestResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def summary(self) -> str:
        return f"passed {self.passed}/{self.total}"


class RegressionResult(BaseModel):
    """Pass, or the previously passing cases that now fail."""

    newly_failing: tuple[TestResult, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.newly_failing

    @property
    def failing_names(self) -> tuple[str, ...]:
        return tuple(r.case_name for r in self.newly_failing)


# --- Specifications ---


class RuleKind(str, Enum):
    COPY = "copy"  # o=i
    NEGATED = "negated"  # o=~i
    CONSTANT = "constant"  # o=1


class SpecRule(BaseModel):
    """Closed-form expectation for one output register."""

    target: str
    kind: RuleKind
    source: str | None = None
    value: int | None = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_operands(self) -> SpecRule:
        if self.kind == RuleKind.CONSTANT:
            if self.value not in (0, 1) or self.source is not None:
                raise ValueError("constant rule needs a bit value and no source")
        elif self.source is None or self.value is not None:
            raise ValueError(f"{self.kind.value} rule needs a source register")
        return self

    def expected_bit(self, d: MachineState) -> int:
        if self.kind == RuleKind.CONSTANT:
            assert self.value is not None
            return self.value
        assert self.source is not None
        bit = d.get(self.source)
        return 1 - bit if self.kind == RuleKind.NEGATED else bit

    def render(self) -> str:
        if self.kind == RuleKind.CONSTANT:
            return f"{self.target}={self.value}"
        prefix = "~" if self.kind == RuleKind.NEGATED else ""
        return f"{self.target}={prefix}{self.source}"


class Specification(BaseModel):
    """
    Binary relation on states over an exhaustively enumerable register domain.

    For each domain state the expectation is the explicit override when one
    exists, otherwise the conjunction of the rules, otherwise ``any``.
    """

    registers: tuple[str, ...] = ()
    rules: tuple[SpecRule, ...] = ()
    expectations: tuple[tuple[MachineState, AcceptancePredicate], ...] = ()
    step_bound: int = Field(default=64, ge=1)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_domain(self) -> Specification:
        domain = set(self.registers)
        if len(domain) != len(self.registers):
            raise ValueError(f"duplicate register in domain {self.registers}")
        targets = [rule.target for rule in self.rules]
        if len(targets) != len(set(targets)):
            raise ValueError("at most one rule per target register")
        for rule in self.rules:
            used = {rule.target} | ({rule.source} if rule.source else set())
            if not used <= domain:
                raise ValueError(f"rule {rule.render()} mentions registers outside the domain")
        for d, _ in self.expectations:
            if not set(d.registers) <= domain:
                raise ValueError(f"expectation input {d} mentions registers outside the domain")
        return self

    @property
    def size(self) -> int:
        return 2 ** len(self.registers)

    def normalize(self, d: MachineState) -> MachineState:
        """Total state over the domain registers."""
        return MachineState(registers={name: d.get(name) for name in self.registers})

    def states(self) -> Iterator[MachineState]:
        """Domain states in declared register order, last register fastest."""
        for bits in itertools.product((0, 1), repeat=len(self.registers)):
            yield MachineState(registers=dict(zip(self.registers, bits, strict=True)))

    def expected(self, d: MachineState) -> AcceptancePredicate:
        """Last expectation whose input pattern agrees with ``d``, else the rules."""
        key = self.normalize(d)
        for pattern, accept in reversed(self.expectations):
            if all(key.get(name) == bit for name, bit in pattern.registers.items()):
                return accept
        return AcceptancePredicate(
            constraints=tuple((rule.target, rule.expected_bit(key)) for rule in self.rules)
        )

    def satisfied_by(self, d: MachineState, outcome: Outcome) -> bool:
        """Correct termination in an accepted state."""
        return (
            outcome.terminated
            and outcome.final is not None
            and self.expected(d).accepts(outcome.final)
        )

    def agrees_with(self, other: Specification) -> bool:
        """Same relation on every state of a shared domain."""
        if set(self.registers) != set(other.registers):
            return False
        return all(self.expected(d) == other.expected(d) for d in self.states())


# --- Effectuation ledger ---


class Purpose(str, Enum):
    """Teleological qualification of an effectuation."""

    CONFIRMATION_TEST = "ConfirmationTest"
    EXPERIMENTATION_TEST = "ExperimentationTest"
    DEMONSTRATION = "Demonstration"
    PRACTICAL_USE = "PracticalUse"

    @property
    def is_test(self) -> bool:
        return self in (Purpose.CONFIRMATION_TEST, Purpose.EXPERIMENTATION_TEST)


class EffectuationRecord(BaseModel):
    """One qualified effectuation."""

    purpose: Purpose | None = None
    program_id: str
    input: MachineState = Field(default_factory=MachineState)
    outcome: OutcomeKind
    steps: int = Field(ge=0)
    timestamp: datetime = Field(default_factory=lambda: datetime.now(UTC))
    program_length: int | None = None
    positions: tuple[int, ...] = ()
    wildcard_oracle: bool | None = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_positions(self) -> EffectuationRecord:
        if self.program_length is not None and self.program_length < 1:
            raise ValueError(f"program length {self.program_length} is not positive")
        upper = self.program_length
        for p in self.positions:
            if p < 1 or (upper is not None and p > upper):
                raise ValueError(f"exercised position {p} outside the program")
        return self

    def render_line(self) -> str:
        purpose = self.purpose.value if self.purpose else "-"
        fields: list[Any] = [purpose, self.program_id, self.outcome.value, self.steps]
        if self.program_length is not None:
            fields.append(f"len={self.program_length}")
        if self.positions:
            fields.append("cov=" + ",".join(str(p) for p in self.positions))
        if self.wildcard_oracle is not None:
            fields.append("oracle=" + ("any" if self.wildcard_oracle else "constrained"))
        return " ".join(str(f) for f in fields)
