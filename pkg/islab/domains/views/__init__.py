"""
Views Domain - Non-mechanical conceptions of fault.

This domain handles:
- Product view: lint rules over the position graph
- Incorrectness view: location-free exhaustive verification
- Defect view: specification defects, sequence faults and phantom failures
- Process view: purpose shares, coverage and oracle quality from the ledger
"""

from .contracts import LintRule
from .lint import (
    RULES,
    DeadStoreRule,
    JumpChainRule,
    NoHaltRule,
    OutOfRangeJumpRule,
    UnreachableRule,
    lint,
    position_graph,
    reachable_positions,
    render_violations,
)
from .models import (
    COMPETENCE_NOTE,
    Correctness,
    DefectKind,
    DefectReport,
    IncorrectnessReport,
    ProcessFlag,
    ProcessReport,
    ProcessThresholds,
    RuleId,
    Severity,
    Violation,
    Witness,
)
from .process import process_report
from .verification import classify_defects, verify_exhaustive

__all__ = [
    # Contracts
    "LintRule",
    # Product view
    "RULES",
    "UnreachableRule",
    "OutOfRangeJumpRule",
    "JumpChainRule",
    "NoHaltRule",
    "DeadStoreRule",
    "position_graph",
    "reachable_positions",
    "lint",
    "render_violations",
    # Incorrectness and defect views
    "verify_exhaustive",
    "classify_defects",
    # Process view
    "process_report",
    # Models
    "Severity",
    "RuleId",
    "Violation",
    "Correctness",
    "Witness",
    "IncorrectnessReport",
    "DefectKind",
    "DefectReport",
    "ProcessThresholds",
    "ProcessFlag",
    "ProcessReport",
    "COMPETENCE_NOTE",
]
