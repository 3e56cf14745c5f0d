"""
Exhaustive Verification - Incorrectness and defect views over a whole domain.

Both views run the sequence on every state of a specification domain. The
incorrectness view reports which inputs go wrong and never where in the
sequence; the defect view also consults an intent oracle to tell
specification defects from sequence faults and phantom failures.
"""

from __future__ import annotations

import logging

from islab.config.errors import ErrorCode, ViewError
from islab.domains.isa import InstructionSequence
from islab.domains.semantics import SemanticsVariant
from islab.domains.testing import ConfirmationHarness, Specification, exhaustive_suite

from .models import Correctness, DefectReport, IncorrectnessReport, Witness

logger = logging.getLogger(__name__)

__all__ = ["verify_exhaustive", "classify_defects"]


def verify_exhaustive(
    x: InstructionSequence,
    spec: Specification,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> IncorrectnessReport:
    """
    Check ``x`` against ``spec`` on every domain state.

    Args:
        x: Sequence under verification
        spec: Specification with an enumerable domain
        v: Semantics variant
        budget: Step budget per effectuation
        cap: Largest domain size accepted

    Returns:
        Correct, or Incorrect with every witness input

    Raises:
        TestingError: Domain larger than ``cap``
    """
    suite = exhaustive_suite(spec, cap)
    results = ConfirmationHarness(v, budget).run_suite(x, suite).results
    witnesses = tuple(
        Witness(
            name=tc.name,
            input=tc.input,
            observed=result.outcome.kind,
            final=result.outcome.final,
            expected=tc.accept,
        )
        for tc, result in zip(suite, results, strict=True)
        if not result.passed
    )
    report = IncorrectnessReport(
        verdict=Correctness.INCORRECT if witnesses else Correctness.CORRECT,
        witnesses=witnesses,
        states_checked=len(suite),
    )
    logger.info(
        "Verification of %s: %s (%d witnesses)", x.program_id, report.verdict.value, len(witnesses)
    )
    return report


def classify_defects(
    x: InstructionSequence,
    spec: Specification,
    intent: Specification,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> DefectReport:
    """
    Split observed discrepancies into specification defects, sequence faults
    and phantom failures.

    Per domain state:
        - x fails spec, spec agrees with intent: sequence fault
        - x fails spec but satisfies intent: phantom failure
        - otherwise, spec disagrees with intent: specification defect

    Raises:
        ViewError: When spec and intent have different domains
    """
    if set(spec.registers) != set(intent.registers):
        raise ViewError(
            "specification and intent range over different registers",
            {"spec": list(spec.registers), "intent": list(intent.registers)},
            code=ErrorCode.VIEWS_DOMAIN_MISMATCH,
        )

    suite = exhaustive_suite(spec, cap)
    results = ConfirmationHarness(v, budget).run_suite(x, suite).results

    spec_defects: list[str] = []
    sequence_faults: list[str] = []
    phantoms: list[str] = []
    for tc, result in zip(suite, results, strict=True):
        wanted = intent.expected(tc.input)
        final = result.outcome.final
        meets_intent = result.outcome.terminated and final is not None and wanted.accepts(final)
        if not result.passed and tc.accept == wanted:
            sequence_faults.append(tc.name)
        elif not result.passed and meets_intent:
            phantoms.append(tc.name)
        elif tc.accept != wanted:
            spec_defects.append(tc.name)

    report = DefectReport(
        spec_defects=tuple(spec_defects),
        sequence_faults=tuple(sequence_faults),
        phantom_failures=tuple(phantoms),
        states_checked=len(suite),
    )
    if phantoms:
        logger.info("%d failures of %s comply with the intent", len(phantoms), x.program_id)
    return report
