"""
Process Report - Measurable proxies for a sound testing process.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Iterable

from islab.domains.testing import EffectuationLedger, EffectuationRecord, Purpose

from .models import ProcessFlag, ProcessReport, ProcessThresholds

logger = logging.getLogger(__name__)

__all__ = ["process_report"]


def _coverage(tests: list[EffectuationRecord]) -> float:
    """Exercised positions over instruction count, summed across distinct programs."""
    exercised: dict[str, set[int]] = defaultdict(set)
    lengths: dict[str, int] = {}
    for record in tests:
        if record.program_length is None:
            continue
        lengths[record.program_id] = record.program_length
        exercised[record.program_id].update(record.positions)
    total = sum(lengths.values())
    if not total:
        return 0.0
    return sum(len(exercised[pid]) for pid in lengths) / total


def process_report(
    ledger: EffectuationLedger | Iterable[EffectuationRecord],
    thresholds: ProcessThresholds | None = None,
) -> ProcessReport:
    """
    Summarize a ledger: purpose shares, test coverage and oracle quality.

    Args:
        ledger: Ledger or records to summarize
        thresholds: Flag thresholds

    Returns:
        ProcessReport with any raised flags
    """
    thresholds = thresholds or ProcessThresholds()
    records = list(ledger.records if isinstance(ledger, EffectuationLedger) else ledger)

    counter = Counter(record.purpose for record in records)
    counts = {purpose: counter.get(purpose, 0) for purpose in Purpose}
    total = len(records)
    tests = [record for record in records if record.purpose is not None and record.purpose.is_test]
    testing_share = len(tests) / total if total else 0.0

    judged = [record for record in tests if record.wildcard_oracle is not None]
    wildcards = sum(1 for record in judged if record.wildcard_oracle)
    wildcard_fraction = wildcards / len(judged) if judged else 0.0
    coverage = _coverage(tests)

    flags: list[ProcessFlag] = []
    if testing_share < thresholds.testing_share_benchmark:
        flags.append(ProcessFlag.BELOW_BENCHMARK)
    if wildcard_fraction > thresholds.wildcard_oracle_max:
        flags.append(ProcessFlag.WILDCARD_ORACLES)
    if judged and wildcards == len(judged) and coverage >= thresholds.coverage_only_threshold:
        flags.append(ProcessFlag.COVERAGE_ONLY)

    report = ProcessReport(
        counts=counts,
        total=total,
        testing_share=testing_share,
        coverage=coverage,
        wildcard_fraction=wildcard_fraction,
        flags=tuple(flags),
    )
    logger.info(
        "Process report over %d effectuations: testing share %.2f, %d flags",
        total,
        testing_share,
        len(flags),
    )
    return report
