"""
Repair Search - Generate-and-validate over the repair alphabet.

Candidates come from :mod:`.alphabet` in a fixed order and each is run
through certification; results are reported certified-first with the
generation order preserved inside each group.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from islab.config.errors import ErrorCode, FaultError
from islab.domains.isa import Fragment, InstructionSequence, Replacement, enumerate_fragments
from islab.domains.semantics import SemanticsVariant
from islab.domains.testing import Specification

from .alphabet import enumerate_replacements
from .certification import FaultCertifier, Oracle, collect_failures
from .models import (
    CertificationResult,
    CertifiedFault,
    FailureRecord,
    FaultBudgetConfig,
    RepairSearchConfig,
)

logger = logging.getLogger(__name__)

__all__ = ["search_repairs", "fault_census"]


def search_repairs(
    x: InstructionSequence,
    oracle: Oracle,
    failures: Sequence[FailureRecord],
    f: Fragment,
    cfg: FaultBudgetConfig,
    search: RepairSearchConfig | None = None,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> list[tuple[Replacement, CertificationResult]]:
    """
    Certify every candidate replacement for ``f``.

    The first failure triggers certification; the others only document what
    else is wrong with ``x``.

    Args:
        x: Faulty sequence
        oracle: Specification or explicit suite used for regression
        failures: Observed failures on x (non-empty)
        f: Fragment under repair
        cfg: Budget profile
        search: Alphabet bounds
        v: Semantics variant
        budget: Step budget

    Returns:
        (replacement, result) pairs, certified ones first

    Raises:
        FaultError: No failure to repair, or an empty alphabet
    """
    if not failures:
        raise FaultError(
            "no failing test case to repair",
            {"program_id": x.program_id},
            code=ErrorCode.FAULT_NO_FAILURE,
        )
    search = search or RepairSearchConfig()
    certifier = FaultCertifier(x, oracle, failures[0], cfg, v, budget, search, cap)

    results: list[tuple[Replacement, CertificationResult]] = []
    for index, r in enumerate(enumerate_replacements(x, f, cfg, search)):
        if search.max_candidates is not None and index >= search.max_candidates:
            logger.warning("Repair search on %s stopped after %d candidates", f, index)
            break
        results.append((r, certifier.certify(f, r)))

    results.sort(key=lambda item: not item[1].certified)
    logger.info(
        "Repair search on %s: %d candidates, %d certified",
        f,
        len(results),
        sum(1 for _, result in results if result.certified),
    )
    return results


def fault_census(
    x: InstructionSequence,
    spec: Specification,
    cfg: FaultBudgetConfig,
    search: RepairSearchConfig | None = None,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
    failing: FailureRecord | None = None,
) -> list[CertifiedFault]:
    """
    Every fragment within the single-fault budget that is a certifiable fault.

    Runs all tests of the domain, takes the first failing case (or
    ``failing``) as trigger, and records the first certified repair of each
    fragment. A correct sequence has an empty census.
    """
    search = search or RepairSearchConfig(registers=spec.registers)
    if failing is None:
        failures = collect_failures(x, spec, v, budget, cap)
        if not failures:
            return []
        failing = failures[0]
    certifier = FaultCertifier(x, spec, failing, cfg, v, budget, search, cap)

    census: list[CertifiedFault] = []
    limit = cfg.max_fault_length(len(x))
    for f in enumerate_fragments(x, limit, search.max_fragment_parts):
        for r in enumerate_replacements(x, f, cfg, search):
            result = certifier.certify(f, r)
            if isinstance(result, CertifiedFault):
                census.append(result)
                break
    logger.info("Fault census of %s: %d certifiable fragments", x.program_id, len(census))
    return census
