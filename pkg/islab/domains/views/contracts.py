"""
View Contracts - Interfaces for views domain.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import networkx as nx

from islab.domains.isa import InstructionSequence

from .models import Severity, Violation


@runtime_checkable
class LintRule(Protocol):
    """
    Contract for a coding rule checked over a sequence and its position graph.

    Example:
        >>> rule = UnreachableRule()
        >>> [v.positions for v in rule.check(x, position_graph(x))]
        [(2,)]
    """

    rule_id: str
    severity: Severity

    def check(self, x: InstructionSequence, graph: nx.DiGraph) -> list[Violation]:
        """
        Check one rule.

        Args:
            x: Sequence under review
            graph: Position graph of x under default semantics

        Returns:
            Violations in position order
        """
        ...
