"""
Fault Models - Budget profiles, failures, certification results and reports.
"""

from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, Field, model_validator

from islab.domains.isa import Fragment, InstructionSequence, Replacement
from islab.domains.semantics import SemanticsVariant
from islab.domains.testing import TestCase, TestResult

_EPS = 1e-9


def _render_replacement(r: Replacement) -> str:
    return r.render() if r.total_length else "(delete)"


# --- Configuration ---


class FaultBudgetConfig(BaseModel):
    """
    Size limits for faults and repairs.

    A single fault may span at most ``max(length_floor, floor(C * len))``
    instructions; a repair's total length may deviate from the fault's by at
    most ``fix_length_deviation`` times the fault length; all faults of one
    sequence together stay within ``total_fraction`` of its length.
    """

    name: str = "custom"
    single_fault_fraction: float = Field(default=0.05, gt=0, le=1)
    fix_length_deviation: float = Field(default=0.50, gt=0, le=1)
    total_fraction: float = Field(default=0.25, gt=0, le=1)
    length_floor: int = Field(default=1, ge=1)
    enforce_minimality: bool = False

    model_config = {"frozen": True}

    def scaled_length(self, n: int) -> int:
        return math.floor(self.single_fault_fraction * n + _EPS)

    def max_fault_length(self, n: int) -> int:
        return max(self.length_floor, self.scaled_length(n))

    def fix_length_ok(self, fault_length: int, repair_length: int) -> bool:
        return abs(repair_length - fault_length) <= self.fix_length_deviation * fault_length + _EPS

    def repair_lengths(self, fault_length: int) -> range:
        """Total repair lengths admitted for a fault of ``fault_length``."""
        slack = math.floor(self.fix_length_deviation * fault_length + _EPS)
        return range(max(0, fault_length - slack), fault_length + slack + 1)

    def within_total(self, total_length: int, n: int) -> bool:
        return total_length <= self.total_fraction * n + _EPS

    def render(self) -> str:
        return (
            f"{self.name} (C={self.single_fault_fraction:g}, "
            f"fix={self.fix_length_deviation:g}, total={self.total_fraction:g}, "
            f"floor={self.length_floor})"
        )


PROFILES: dict[str, FaultBudgetConfig] = {
    "s1": FaultBudgetConfig(name="s1", single_fault_fraction=0.05),
    "s4": FaultBudgetConfig(name="s4", single_fault_fraction=0.10),
}


class RepairSearchConfig(BaseModel):
    """Bounds of the repair alphabet and of fragment enumeration."""

    max_part_length: int = Field(default=3, ge=1)
    max_fragment_parts: int = Field(default=2, ge=1)
    registers: tuple[str, ...] = ()  # added to the program's own registers
    include_jumps: bool = True
    include_backward_jumps: bool = False
    include_halt: bool = True
    max_candidates: int | None = Field(default=None, ge=1)

    model_config = {"frozen": True}


# --- Failures and certification ---


class FailureRecord(BaseModel):
    """A failing test case together with what was observed."""

    test_case: TestCase
    result: TestResult
    variant: SemanticsVariant = Field(default_factory=SemanticsVariant)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_failed(self) -> FailureRecord:
        if self.result.passed:
            raise ValueError(f"case {self.test_case.name} passed; not a failure")
        return self


class RegressionSource(str, Enum):
    SUITE = "suite"
    EXHAUSTIVE = "exhaustive"


class RejectionReason(str, Enum):
    SIZE_BUDGET = "size-budget"
    FIX_LENGTH = "fix-length"
    EMPTY_RESULT = "empty-result"
    REPAIR_CONFIRMATION = "repair-confirmation"
    REGRESSION = "regression"
    MINIMALITY = "minimality"


class CertifiedFault(BaseModel):
    """A fragment, its repair and the evidence that makes it a mechanical fault."""

    fragment: Fragment
    replacement: Replacement
    failure: FailureRecord
    repaired: InstructionSequence
    regression_source: RegressionSource
    regression_cases: tuple[str, ...] = ()
    sequence_length: int = Field(ge=1)

    model_config = {"frozen": True}

    @property
    def certified(self) -> bool:
        return True

    @property
    def fault_length(self) -> int:
        return self.fragment.total_length

    @property
    def repair_length(self) -> int:
        return self.replacement.total_length

    @property
    def fault_fraction(self) -> float:
        return self.fault_length / self.sequence_length

    def render(self) -> str:
        return (
            f"CERTIFIED {self.fragment} -> {_render_replacement(self.replacement)} "
            f"trigger={self.failure.test_case.name} "
            f"regression={self.regression_source.value}:{len(self.regression_cases)} "
            f"fraction={self.fault_length}/{self.sequence_length}"
        )


class Rejection(BaseModel):
    """A candidate that failed at least one certification condition."""

    fragment: Fragment
    replacement: Replacement
    reasons: tuple[RejectionReason, ...]
    messages: tuple[str, ...] = ()

    model_config = {"frozen": True}

    @property
    def certified(self) -> bool:
        return False

    def render(self) -> str:
        return f"REJECTED {self.fragment} -> {_render_replacement(self.replacement)}: " + "; ".join(
            self.messages or tuple(r.value for r in self.reasons)
        )


CertificationResult = CertifiedFault | Rejection


# --- Reports ---


class IdealizedVerdict(BaseModel):
    """Outcome of comparing x and x' over every state of a specification domain."""

    fixed: tuple[str, ...] = ()  # Fail on x, Pass on x'
    regressions: tuple[str, ...] = ()  # Pass on x, Fail on x'

    @property
    def holds(self) -> bool:
        return bool(self.fixed) and not self.regressions


class DiscrepancyReport(BaseModel):
    """Suite-based regression compared with the idealized criterion."""

    suite_passed: bool
    idealized: IdealizedVerdict
    unseen_regressions: tuple[str, ...] = ()

    @property
    def false_positive(self) -> bool:
        return self.suite_passed and not self.idealized.holds


class BudgetReport(BaseModel):
    """Fault count and volume of one sequence."""

    count: int
    total_length: int
    sequence_length: int
    total_fraction: float
    redesign_required: bool

    @property
    def effective_count(self) -> float:
        """Beyond the total budget, fault removal has stopped working."""
        return math.inf if self.redesign_required else float(self.count)


class AdequacyVerdict(str, Enum):
    ADEQUATE = "adequate"
    NOT_ADEQUATE = "not-adequate"


class NotAdequateReason(str, Enum):
    BUDGET_EXHAUSTED = "budget-exhausted"
    SEARCH_EXHAUSTED = "search-exhausted"


class SearchStats(BaseModel):
    candidates_tried: int = 0
    certified: int = 0
    pruned_by_total_budget: int = 0
    backtracks: int = 0


class AdequacyReport(BaseModel):
    """Adequate with a chain of certified faults, or why no chain was found."""

    verdict: AdequacyVerdict
    reason: NotAdequateReason | None = None
    chain: tuple[CertifiedFault, ...] = ()
    final: InstructionSequence | None = None
    total_fault_length: int = 0
    initial_length: int = Field(ge=1)
    stats: SearchStats = Field(default_factory=SearchStats)

    @property
    def adequate(self) -> bool:
        return self.verdict == AdequacyVerdict.ADEQUATE

    @property
    def total_fraction(self) -> float:
        return self.total_fault_length / self.initial_length

    def render(self) -> str:
        if self.adequate:
            return f"Adequate chain={len(self.chain)} fraction={self.total_fault_length}/{self.initial_length}"
        assert self.reason is not None
        return f"NotAdequate reason={self.reason.value}"
