"""
Fault Certification - Decide whether a fragment and a repair form a mechanical fault.

A candidate (f, f') in x is certified when f fits the size budget, f' stays
within the fix-length bound, x' = x[f := f'] passes the triggering test case
cleanly, and every test that passed on x still passes on x'. Optionally no
proper sub-fragment of f may admit such a repair.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from islab.config.errors import ErrorCode, FaultError, SequenceError
from islab.domains.isa import (
    Fragment,
    InstructionSequence,
    Replacement,
    check_fragment,
    enumerate_fragments,
    substitute,
)
from islab.domains.semantics import SemanticsVariant
from islab.domains.testing import (
    ConfirmationHarness,
    Specification,
    TestCase,
    exhaustive_suite,
)

from .alphabet import enumerate_replacements
from .models import (
    CertificationResult,
    CertifiedFault,
    DiscrepancyReport,
    FailureRecord,
    FaultBudgetConfig,
    IdealizedVerdict,
    RegressionSource,
    Rejection,
    RejectionReason,
    RepairSearchConfig,
)

logger = logging.getLogger(__name__)

__all__ = [
    "FaultCertifier",
    "certify_fault",
    "collect_failures",
    "idealized_regression_criterion",
    "regression_discrepancy",
]

Oracle = Specification | Sequence[TestCase]


def _regression_suite(oracle: Oracle, cap: int) -> tuple[list[TestCase], RegressionSource]:
    if isinstance(oracle, Specification):
        return exhaustive_suite(oracle, cap), RegressionSource.EXHAUSTIVE
    return list(oracle), RegressionSource.SUITE


def collect_failures(
    x: InstructionSequence,
    oracle: Oracle,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> list[FailureRecord]:
    """Failing cases of ``x`` in suite (or domain) order."""
    v = v or SemanticsVariant()
    suite, _ = _regression_suite(oracle, cap)
    results = ConfirmationHarness(v, budget).run_suite(x, suite)
    return [
        FailureRecord(test_case=tc, result=result, variant=v)
        for tc, result in zip(suite, results.results, strict=True)
        if not result.passed
    ]


class FaultCertifier:
    """
    Certifies candidates for one sequence, one triggering failure and one oracle.

    The pass/fail baseline of ``x`` is computed once, so certifying many
    candidates only pays for effectuating each x'.

    Raises:
        FaultError: When the triggering case does not fail on ``x``
    """

    def __init__(
        self,
        x: InstructionSequence,
        oracle: Oracle,
        failing: FailureRecord,
        cfg: FaultBudgetConfig,
        v: SemanticsVariant | None = None,
        budget: int = 10000,
        search: RepairSearchConfig | None = None,
        cap: int = 2**16,
    ) -> None:
        self.x = x
        self.oracle = oracle
        self.failing = failing
        self.cfg = cfg
        self.variant = v or failing.variant
        self.budget = budget
        self.search = search or RepairSearchConfig()
        self._harness = ConfirmationHarness(self.variant, budget)

        trigger = self._harness.run_confirmation_test(x, failing.test_case)
        if trigger.passed:
            raise FaultError(
                f"case {failing.test_case.name} passes on the sequence; the failure is stale",
                {"case": failing.test_case.name, "program_id": x.program_id},
                code=ErrorCode.FAULT_STALE_FAILURE,
            )

        suite, self.source = _regression_suite(oracle, cap)
        baseline = self._harness.run_suite(x, suite)
        self.previously_passing = [
            tc for tc, result in zip(suite, baseline.results, strict=True) if result.passed
        ]

    def certify(
        self,
        f: Fragment,
        r: Replacement,
        check_minimality: bool | None = None,
    ) -> CertificationResult:
        """Evaluate every condition and collect all that are violated."""
        check_fragment(self.x, f)
        n = len(self.x)
        fault_length = f.total_length
        repair_length = r.total_length
        reasons: list[RejectionReason] = []
        messages: list[str] = []

        limit = self.cfg.max_fault_length(n)
        if fault_length > limit:
            reasons.append(RejectionReason.SIZE_BUDGET)
            messages.append(
                f"size budget: {fault_length} > max({self.cfg.length_floor}, {self.cfg.scaled_length(n)})"
            )
        if not self.cfg.fix_length_ok(fault_length, repair_length):
            reasons.append(RejectionReason.FIX_LENGTH)
            messages.append(
                f"fix length: |{repair_length} - {fault_length}| > "
                f"{self.cfg.fix_length_deviation:g} * {fault_length}"
            )

        repaired: InstructionSequence | None
        try:
            repaired = substitute(self.x, f, r)
        except SequenceError as e:
            if e.code != ErrorCode.SEQUENCE_EMPTY_RESULT:
                raise
            repaired = None
            reasons.append(RejectionReason.EMPTY_RESULT)
            messages.append("repair deletes every instruction")

        regression_names: tuple[str, ...] = ()
        if repaired is not None:
            trigger = self._harness.run_confirmation_test(repaired, self.failing.test_case)
            if not trigger.passed:
                reasons.append(RejectionReason.REPAIR_CONFIRMATION)
                messages.append(f"repair confirmation failed: {trigger.render()}")
            regression = self._harness.regression_check(repaired, self.previously_passing)
            if not regression.passed:
                reasons.append(RejectionReason.REGRESSION)
                messages.append("regression: " + ", ".join(regression.failing_names))
            regression_names = tuple(tc.name for tc in self.previously_passing)

        minimality = self.cfg.enforce_minimality if check_minimality is None else check_minimality
        if not reasons and minimality:
            witness = self._smaller_fault(f)
            if witness is not None:
                reasons.append(RejectionReason.MINIMALITY)
                messages.append(f"minimality: sub-fragment {witness.fragment} is a fault")

        if reasons:
            logger.debug("Rejected %s -> %s: %s", f, r, ", ".join(reason.value for reason in reasons))
            return Rejection(
                fragment=f, replacement=r, reasons=tuple(reasons), messages=tuple(messages)
            )

        assert repaired is not None
        logger.debug("Certified %s -> %s", f, r)
        return CertifiedFault(
            fragment=f,
            replacement=r,
            failure=self.failing,
            repaired=repaired,
            regression_source=self.source,
            regression_cases=regression_names,
            sequence_length=n,
        )

    def _smaller_fault(self, f: Fragment) -> CertifiedFault | None:
        """A certified fault on a proper part-wise sub-fragment of ``f``, if any."""
        for g in enumerate_fragments(self.x, f.total_length, f.arity):
            if g == f or not g.contained_in(f):
                continue
            for r in enumerate_replacements(self.x, g, self.cfg, self.search):
                result = self.certify(g, r, check_minimality=False)
                if isinstance(result, CertifiedFault):
                    return result
        return None


def certify_fault(
    x: InstructionSequence,
    oracle: Oracle,
    failing: FailureRecord,
    f: Fragment,
    r: Replacement,
    cfg: FaultBudgetConfig,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    search: RepairSearchConfig | None = None,
    cap: int = 2**16,
) -> CertificationResult:
    """
    Certify one candidate fault/repair pair.

    Args:
        x: Faulty sequence
        oracle: Specification (exhaustive regression) or explicit suite
        failing: The triggering failure, re-verified on ``x``
        f: Candidate fault
        r: Candidate repair
        cfg: Budget profile
        v: Semantics variant (defaults to the failure's)
        budget: Step budget per effectuation
        search: Alphabet bounds for the minimality check

    Returns:
        CertifiedFault, or Rejection listing every violated condition

    Raises:
        FaultError: Stale failure
        SequenceError: Fragment out of bounds or arity mismatch
    """
    check_fragment(x, f)
    certifier = FaultCertifier(x, oracle, failing, cfg, v, budget, search, cap)
    result = certifier.certify(f, r)
    logger.info("%s", result.render())
    return result


def idealized_regression_criterion(
    x: InstructionSequence,
    x_repaired: InstructionSequence,
    spec: Specification,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> IdealizedVerdict:
    """
    Compare x and x' on every domain state.

    Holds when at least one case flips from Fail to Pass and none flips back.
    """
    suite = exhaustive_suite(spec, cap)
    harness = ConfirmationHarness(v or SemanticsVariant(), budget)
    before = harness.run_suite(x, suite).results
    after = harness.run_suite(x_repaired, suite).results
    fixed = tuple(a.case_name for b, a in zip(before, after, strict=True) if not b.passed and a.passed)
    regressions = tuple(
        a.case_name for b, a in zip(before, after, strict=True) if b.passed and not a.passed
    )
    return IdealizedVerdict(fixed=fixed, regressions=regressions)


def regression_discrepancy(
    x: InstructionSequence,
    x_repaired: InstructionSequence,
    suite: Sequence[TestCase],
    spec: Specification,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> DiscrepancyReport:
    """
    Suite-based regression testing against the idealized criterion.

    Regression testing approximates the idealized criterion from below, so a
    suite can accept a repair that breaks states it never looks at.
    """
    harness = ConfirmationHarness(v or SemanticsVariant(), budget)
    baseline = harness.run_suite(x, suite)
    passing = [tc for tc, r in zip(suite, baseline.results, strict=True) if r.passed]
    suite_passed = harness.regression_check(x_repaired, passing).passed

    idealized = idealized_regression_criterion(x, x_repaired, spec, v, budget, cap)
    covered = {spec.normalize(tc.input) for tc in suite}
    by_name = {tc.name: tc for tc in exhaustive_suite(spec, cap)}
    unseen = tuple(
        name for name in idealized.regressions if spec.normalize(by_name[name].input) not in covered
    )
    report = DiscrepancyReport(
        suite_passed=suite_passed, idealized=idealized, unseen_regressions=unseen
    )
    if report.false_positive:
        logger.info("Suite regression accepts a repair the idealized criterion rejects")
    return report
