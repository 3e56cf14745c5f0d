"""
Faults Domain - Mechanical fault certification, repair search and adequacy.

This domain handles:
- Certifying fragment/repair pairs as faults
- Generate-and-validate repair search over an instruction alphabet
- The idealized regression criterion and its gap to suite regression
- Fault accounting under single-fault and total budgets
- Adequacy modulo a limited volume of faults
"""

from .accounting import fault_accounting, get_profile
from .adequacy import check_adequacy
from .alphabet import enumerate_replacements, repair_alphabet
from .certification import (
    FaultCertifier,
    certify_fault,
    collect_failures,
    idealized_regression_criterion,
    regression_discrepancy,
)
from .contracts import CandidateCertifier
from .models import (
    PROFILES,
    AdequacyReport,
    AdequacyVerdict,
    BudgetReport,
    CertificationResult,
    CertifiedFault,
    DiscrepancyReport,
    FailureRecord,
    FaultBudgetConfig,
    IdealizedVerdict,
    NotAdequateReason,
    RegressionSource,
    Rejection,
    RejectionReason,
    RepairSearchConfig,
    SearchStats,
)
from .repair_search import fault_census, search_repairs

__all__ = [
    # Contracts
    "CandidateCertifier",
    # Certification
    "FaultCertifier",
    "certify_fault",
    "collect_failures",
    "idealized_regression_criterion",
    "regression_discrepancy",
    # Search
    "repair_alphabet",
    "enumerate_replacements",
    "search_repairs",
    "fault_census",
    "check_adequacy",
    # Accounting
    "get_profile",
    "fault_accounting",
    # Models
    "PROFILES",
    "FaultBudgetConfig",
    "RepairSearchConfig",
    "FailureRecord",
    "CertifiedFault",
    "Rejection",
    "RejectionReason",
    "CertificationResult",
    "RegressionSource",
    "IdealizedVerdict",
    "DiscrepancyReport",
    "BudgetReport",
    "AdequacyReport",
    "AdequacyVerdict",
    "NotAdequateReason",
    "SearchStats",
]
