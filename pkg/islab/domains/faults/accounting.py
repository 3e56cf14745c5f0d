"""
Fault Accounting - Budget profiles and fault volume per sequence.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

from islab.config.errors import ErrorCode, FaultError
from islab.domains.isa import Fragment, InstructionSequence

from .models import PROFILES, BudgetReport, CertifiedFault, FaultBudgetConfig

logger = logging.getLogger(__name__)

__all__ = ["get_profile", "fault_accounting"]


def get_profile(name: str) -> FaultBudgetConfig:
    """Look up a named budget profile (``s1`` or ``s4``)."""
    try:
        return PROFILES[name]
    except KeyError:
        raise FaultError(
            f"unknown budget profile {name!r}",
            {"allowed": sorted(PROFILES)},
            code=ErrorCode.FAULT_UNKNOWN_PROFILE,
        ) from None


def fault_accounting(
    x: InstructionSequence,
    faults: Sequence[CertifiedFault | Fragment],
    cfg: FaultBudgetConfig,
) -> BudgetReport:
    """
    Count faults and their volume against the total budget.

    Raises:
        FaultError: When two fragments overlap
    """
    fragments = [f.fragment if isinstance(f, CertifiedFault) else f for f in faults]
    for a, b in itertools.combinations(fragments, 2):
        if a.overlaps(b):
            raise FaultError(
                f"faults {a} and {b} overlap",
                {"first": a.render(), "second": b.render()},
                code=ErrorCode.FAULT_OVERLAP,
            )

    n = len(x)
    total = sum(f.total_length for f in fragments)
    report = BudgetReport(
        count=len(fragments),
        total_length=total,
        sequence_length=n,
        total_fraction=total / n,
        redesign_required=not cfg.within_total(total, n),
    )
    if report.redesign_required:
        logger.info(
            "Faults cover %d of %d instructions, beyond %.0f%%: redesign required",
            total,
            n,
            cfg.total_fraction * 100,
        )
    return report
