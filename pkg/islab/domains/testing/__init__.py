"""
Testing Domain - Confirmation tests, suites, regression checks and the effectuation ledger.

This domain handles:
- Test cases (input, acceptance, step bound) and their verdicts
- Specifications over exhaustively enumerable register domains
- Suite and specification file formats
- Purpose-tagged effectuation records
"""

from .contracts import AcceptanceOracle, RecordSink
from .formats import (
    parse_acceptance,
    parse_probes,
    parse_specification,
    parse_state,
    parse_suite,
    render_specification,
    render_suite,
)
from .harness import (
    ConfirmationHarness,
    exhaustive_suite,
    regression_check,
    run_confirmation_test,
    run_suite,
)
from .ledger import EffectuationLedger, parse_ledger_line, record_effectuation
from .models import (
    AcceptancePredicate,
    EffectuationRecord,
    FailReason,
    Purpose,
    RegressionResult,
    RuleKind,
    Specification,
    SpecRule,
    SuiteResult,
    TestCase,
    TestResult,
    Verdict,
)

__all__ = [
    # Contracts
    "AcceptanceOracle",
    "RecordSink",
    # Harness
    "ConfirmationHarness",
    "run_confirmation_test",
    "run_suite",
    "regression_check",
    "exhaustive_suite",
    # Ledger
    "EffectuationLedger",
    "record_effectuation",
    "parse_ledger_line",
    # Formats
    "parse_state",
    "parse_acceptance",
    "parse_suite",
    "render_suite",
    "parse_specification",
    "render_specification",
    "parse_probes",
    # Models
    "AcceptancePredicate",
    "TestCase",
    "TestResult",
    "SuiteResult",
    "RegressionResult",
    "Verdict",
    "FailReason",
    "RuleKind",
    "SpecRule",
    "Specification",
    "Purpose",
    "EffectuationRecord",
]
