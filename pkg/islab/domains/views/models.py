"""
View Models - Violations, incorrectness, defects and process reports.
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from islab.domains.semantics import MachineState, OutcomeKind
from islab.domains.testing import AcceptancePredicate, Purpose

# --- Product view ---


class Severity(str, Enum):
    STYLE = "style"
    HAZARD = "hazard"


class RuleId(str, Enum):
    """Identifiers of the shipped lint rules."""

    UNREACHABLE = "unreachable"
    OOR_JUMP = "oor-jump"
    JUMP_CHAIN = "jump-chain"
    NO_HALT = "no-halt"
    DEAD_STORE = "dead-store"


class Violation(BaseModel):
    """A breach of a coding rule; not necessarily a fault."""

    rule: str
    positions: tuple[int, ...] = ()
    message: str
    severity: Severity = Severity.STYLE

    model_config = {"frozen": True}

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.positions[0] if self.positions else 0, self.rule)

    def render(self) -> str:
        where = ",".join(str(p) for p in self.positions) or "-"
        return f"{where}: [{self.severity.value}] {self.rule}: {self.message}"

    def render_machine(self) -> str:
        where = ",".join(str(p) for p in self.positions) or "-"
        return f"VIOLATION {self.rule} {where}"


# --- Incorrectness view ---


class Correctness(str, Enum):
    CORRECT = "Correct"
    INCORRECT = "Incorrect"


class Witness(BaseModel):
    """An input the sequence handles wrongly. Carries no position in the sequence."""

    name: str
    input: MachineState
    observed: OutcomeKind
    final: MachineState | None = None
    expected: AcceptancePredicate

    model_config = {"frozen": True}

    def render(self) -> str:
        got = self.observed.value
        if self.final is not None:
            got += f" {self.final.render()}"
        return f"{self.name}: in {self.input.render()} ; got {got} ; expected {self.expected.render()}"


class IncorrectnessReport(BaseModel):
    verdict: Correctness
    witnesses: tuple[Witness, ...] = ()
    states_checked: int = Field(ge=0)

    model_config = {"frozen": True}

    @property
    def correct(self) -> bool:
        return self.verdict == Correctness.CORRECT

    def render(self) -> str:
        if self.correct:
            return f"Correct ({self.states_checked} states)"
        lines = [f"Incorrect: {len(self.witnesses)} of {self.states_checked} states"]
        lines.extend("  " + w.render() for w in self.witnesses)
        return "\n".join(lines)


# --- Defect view ---


class DefectKind(str, Enum):
    SPEC_DEFECT = "spec_defect"
    SEQUENCE_FAULT = "sequence_fault"
    PHANTOM_FAILURE = "phantom_failure"


class DefectReport(BaseModel):
    """
    Observed discrepancies split three ways.

    A state appears in at most one of the sets; states where the sequence,
    the specification and the intent all agree are not reported.
    """

    spec_defects: tuple[str, ...] = ()
    sequence_faults: tuple[str, ...] = ()
    phantom_failures: tuple[str, ...] = ()
    states_checked: int = Field(default=0, ge=0)

    model_config = {"frozen": True}

    def of_kind(self, kind: DefectKind) -> tuple[str, ...]:
        return {
            DefectKind.SPEC_DEFECT: self.spec_defects,
            DefectKind.SEQUENCE_FAULT: self.sequence_faults,
            DefectKind.PHANTOM_FAILURE: self.phantom_failures,
        }[kind]

    def render(self) -> str:
        return "\n".join(
            f"{kind.value}: {len(self.of_kind(kind))}"
            + (" " + " ".join(self.of_kind(kind)) if self.of_kind(kind) else "")
            for kind in DefectKind
        )


# --- Process view ---


class ProcessThresholds(BaseModel):
    testing_share_benchmark: float = Field(default=0.50, ge=0, le=1)
    wildcard_oracle_max: float = Field(default=0.50, ge=0, le=1)
    coverage_only_threshold: float = Field(default=0.80, ge=0, le=1)

    model_config = {"frozen": True}


class ProcessFlag(str, Enum):
    BELOW_BENCHMARK = "testing-share-below-benchmark"
    WILDCARD_ORACLES = "wildcard-oracles"
    COVERAGE_ONLY = "coverage-only-suite"


COMPETENCE_NOTE = (
    "understanding and competence of the engineers are not mechanically measurable; "
    "only shares, coverage and oracle wildcards are reported"
)


class ProcessReport(BaseModel):
    """Process-authority findings over an effectuation ledger."""

    counts: dict[Purpose, int]
    total: int = Field(ge=0)
    testing_share: float = Field(ge=0, le=1)
    coverage: float = Field(ge=0, le=1)
    wildcard_fraction: float = Field(ge=0, le=1)
    flags: tuple[ProcessFlag, ...] = ()
    notes: tuple[str, ...] = (COMPETENCE_NOTE,)

    def share(self, purpose: Purpose) -> float:
        return self.counts.get(purpose, 0) / self.total if self.total else 0.0

    def render(self) -> str:
        lines = [f"effectuations: {self.total}"]
        lines.extend(
            f"  {purpose.value}: {self.counts.get(purpose, 0)} ({self.share(purpose):.2f})"
            for purpose in Purpose
        )
        lines.append(f"testing share: {self.testing_share:.2f}")
        lines.append(f"instruction coverage: {self.coverage:.2f}")
        lines.append(f"wildcard oracles: {self.wildcard_fraction:.2f}")
        lines.append("flags: " + (" ".join(f.value for f in self.flags) or "none"))
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines)
