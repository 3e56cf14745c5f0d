"""
Fault Contracts - Interfaces for faults domain.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

from islab.domains.isa import Fragment, Replacement

from .models import CertificationResult


@runtime_checkable
class CandidateCertifier(Protocol):
    """
    Contract for judging candidate fault/repair pairs of one sequence.

    Example:
        >>> certifier = FaultCertifier(x, spec, failure, PROFILES["s4"])
        >>> certifier.certify(Fragment.of((1, 1)), parse_replacement("+i.get")).certified
        True
    """

    def certify(self, f: Fragment, r: Replacement) -> CertificationResult:
        """
        Evaluate one candidate.

        Args:
            f: Candidate fault
            r: Candidate repair

        Returns:
            CertifiedFault or Rejection
        """
        ...
