"""
Adequacy Search - Adequacy modulo a limited volume of faults.

A sequence is adequate when a chain of disjoint certified faults, each
repaired in turn, leads to a sequence that passes every test of the
specification domain, with all faults together inside the total budget.
The search is depth-first and backtracks out of dead ends:

    failing cases in domain order
      -> fragments in enumeration order
        -> repairs in alphabet order

Positions introduced by a repair belong to no original instruction and are
never part of a later fault, so the chain stays disjoint in the initial
sequence.
"""

from __future__ import annotations

import logging

from islab.domains.isa import Fragment, InstructionSequence, Replacement, enumerate_fragments
from islab.domains.semantics import SemanticsVariant
from islab.domains.testing import ConfirmationHarness, Specification, exhaustive_suite

from .alphabet import enumerate_replacements
from .certification import FaultCertifier
from .models import (
    AdequacyReport,
    AdequacyVerdict,
    CertifiedFault,
    FailureRecord,
    FaultBudgetConfig,
    NotAdequateReason,
    RepairSearchConfig,
    SearchStats,
)

logger = logging.getLogger(__name__)

__all__ = ["check_adequacy"]

Origin = tuple[int | None, ...]


def _splice_origin(origin: Origin, f: Fragment, r: Replacement) -> Origin:
    """Provenance after substitution: new instructions map to no original position."""
    spliced: list[int | None] = []
    cursor = 1
    for (lo, hi), part in zip(f.parts, r.parts, strict=True):
        spliced.extend(origin[cursor - 1 : lo - 1])
        spliced.extend([None] * len(part))
        cursor = hi + 1
    spliced.extend(origin[cursor - 1 :])
    return tuple(spliced)


class _AdequacySearch:
    def __init__(
        self,
        spec: Specification,
        cfg: FaultBudgetConfig,
        search: RepairSearchConfig,
        v: SemanticsVariant,
        budget: int,
        cap: int,
        initial_length: int,
    ) -> None:
        self.spec = spec
        self.cfg = cfg
        self.search = search
        self.variant = v
        self.budget = budget
        self.cap = cap
        self.initial_length = initial_length
        self.suite = exhaustive_suite(spec, cap)
        self.harness = ConfirmationHarness(v, budget)
        self.stats = SearchStats()
        self._visited: set[tuple[str, Origin, int]] = set()

    def failures(self, x: InstructionSequence) -> list[FailureRecord]:
        results = self.harness.run_suite(x, self.suite).results
        return [
            FailureRecord(test_case=tc, result=result, variant=self.variant)
            for tc, result in zip(self.suite, results, strict=True)
            if not result.passed
        ]

    def run(
        self,
        x: InstructionSequence,
        origin: Origin,
        used: int,
        chain: tuple[CertifiedFault, ...],
    ) -> tuple[tuple[CertifiedFault, ...], InstructionSequence] | None:
        failing = self.failures(x)
        if not failing:
            return chain, x

        key = (x.program_id, origin, used)
        if key in self._visited:
            return None
        self._visited.add(key)

        limit = self.cfg.max_fault_length(len(x))
        for trigger in failing:
            certifier = FaultCertifier(
                x, self.spec, trigger, self.cfg, self.variant, self.budget, self.search, self.cap
            )
            for f in enumerate_fragments(x, limit, self.search.max_fragment_parts):
                if any(origin[p - 1] is None for p in f.positions):
                    continue
                over_total = not self.cfg.within_total(used + f.total_length, self.initial_length)
                if over_total and self.stats.pruned_by_total_budget:
                    # budget exhaustion already witnessed
                    continue
                for r in enumerate_replacements(x, f, self.cfg, self.search):
                    self.stats.candidates_tried += 1
                    result = certifier.certify(f, r)
                    if not isinstance(result, CertifiedFault):
                        continue
                    self.stats.certified += 1
                    if over_total:
                        self.stats.pruned_by_total_budget += 1
                        logger.debug("Fault %s certified but beyond the total budget", f)
                        break
                    logger.debug("Stage %d: %s", len(chain) + 1, result.render())
                    found = self.run(
                        result.repaired,
                        _splice_origin(origin, f, r),
                        used + f.total_length,
                        (*chain, result),
                    )
                    if found is not None:
                        return found
                    self.stats.backtracks += 1
        return None


def check_adequacy(
    x: InstructionSequence,
    spec: Specification,
    cfg: FaultBudgetConfig,
    search: RepairSearchConfig | None = None,
    v: SemanticsVariant | None = None,
    budget: int = 10000,
    cap: int = 2**16,
) -> AdequacyReport:
    """
    Search for a chain of certified faults whose repair makes ``x`` correct.

    Args:
        x: Sequence under assessment
        spec: Specification whose whole domain is tested
        cfg: Budget profile (single fault, fix length and total budgets)
        search: Alphabet and fragment bounds; the domain registers are
            added to the alphabet
        v: Semantics variant
        budget: Step budget per effectuation

    Returns:
        Adequate with the chain, or NotAdequate with ``budget-exhausted``
        when some certified fault was cut off by the total budget and
        ``search-exhausted`` otherwise
    """
    search = search or RepairSearchConfig()
    registers = tuple(dict.fromkeys((*search.registers, *spec.registers)))
    search = search.model_copy(update={"registers": registers})

    engine = _AdequacySearch(spec, cfg, search, v or SemanticsVariant(), budget, cap, len(x))
    found = engine.run(x, tuple(range(1, len(x) + 1)), 0, ())

    if found is not None:
        chain, final = found
        report = AdequacyReport(
            verdict=AdequacyVerdict.ADEQUATE,
            chain=chain,
            final=final,
            total_fault_length=sum(fault.fault_length for fault in chain),
            initial_length=len(x),
            stats=engine.stats,
        )
    else:
        reason = (
            NotAdequateReason.BUDGET_EXHAUSTED
            if engine.stats.pruned_by_total_budget
            else NotAdequateReason.SEARCH_EXHAUSTED
        )
        report = AdequacyReport(
            verdict=AdequacyVerdict.NOT_ADEQUATE,
            reason=reason,
            initial_length=len(x),
            stats=engine.stats,
        )
    logger.info("Adequacy of %s under %s: %s", x.program_id, cfg.name, report.render())
    return report
