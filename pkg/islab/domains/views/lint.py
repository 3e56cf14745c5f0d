"""
Sequence Linter - Product-authority rules over instruction sequences.

Rules work on the position graph: one node per instruction, an edge for
every way control can move on under default semantics. Control leaving
1..len deadlocks there, so such moves have no edge.

Shipped rules:
    unreachable  position not reachable from 1
    oor-jump     jump whose static target lies outside 1..len
    jump-chain   jump landing on another jump
    no-halt      no reachable ``!``
    dead-store   register set, then set again before anything reads it

The rule set is illustrative; pass any object satisfying
:class:`~.contracts.LintRule` to extend it.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import networkx as nx

from islab.config.errors import ViewError
from islab.domains.isa import InstructionKind, InstructionSequence

from .contracts import LintRule
from .models import RuleId, Severity, Violation

logger = logging.getLogger(__name__)

__all__ = [
    "position_graph",
    "reachable_positions",
    "UnreachableRule",
    "OutOfRangeJumpRule",
    "JumpChainRule",
    "NoHaltRule",
    "DeadStoreRule",
    "RULES",
    "lint",
    "render_violations",
]


def position_graph(x: InstructionSequence) -> nx.DiGraph:
    """Control-flow graph over positions 1..len."""
    n = len(x)
    graph = nx.DiGraph()
    for p, ins in enumerate(x.instructions, start=1):
        graph.add_node(p, instruction=ins.render())
    for p, ins in enumerate(x.instructions, start=1):
        if ins.kind == InstructionKind.HALT:
            continue
        if ins.is_jump:
            targets = [ins.jump_target(p)]
        elif ins.is_test:
            targets = [p + 1, p + 2]
        else:
            targets = [p + 1]
        for t in targets:
            if t is not None and 1 <= t <= n:
                graph.add_edge(p, t)
    return graph


def reachable_positions(graph: nx.DiGraph) -> set[int]:
    return {1} | nx.descendants(graph, 1)


class UnreachableRule:
    rule_id = RuleId.UNREACHABLE.value
    severity = Severity.STYLE

    def check(self, x: InstructionSequence, graph: nx.DiGraph) -> list[Violation]:
        reachable = reachable_positions(graph)
        return [
            Violation(
                rule=self.rule_id,
                positions=(p,),
                message=f"instruction {x.instructions[p - 1]} can never be reached",
                severity=self.severity,
            )
            for p in sorted(graph.nodes)
            if p not in reachable
        ]


class OutOfRangeJumpRule:
    rule_id = RuleId.OOR_JUMP.value
    severity = Severity.HAZARD

    def check(self, x: InstructionSequence, graph: nx.DiGraph) -> list[Violation]:
        violations = []
        for p, ins in enumerate(x.instructions, start=1):
            target = ins.jump_target(p)
            if target is not None and not 1 <= target <= len(x):
                violations.append(
                    Violation(
                        rule=self.rule_id,
                        positions=(p,),
                        message=f"{ins} targets {target}, outside 1..{len(x)}",
                        severity=self.severity,
                    )
                )
        return violations


class JumpChainRule:
    rule_id = RuleId.JUMP_CHAIN.value
    severity = Severity.STYLE

    def check(self, x: InstructionSequence, graph: nx.DiGraph) -> list[Violation]:
        violations = []
        for p, ins in enumerate(x.instructions, start=1):
            target = ins.jump_target(p)
            if target is None or not 1 <= target <= len(x) or target == p:
                continue
            if x.instructions[target - 1].is_jump:
                violations.append(
                    Violation(
                        rule=self.rule_id,
                        positions=tuple(sorted((p, target))),
                        message=f"jump at {p} lands on jump at {target}",
                        severity=self.severity,
                    )
                )
        return violations


class NoHaltRule:
    rule_id = RuleId.NO_HALT.value
    severity = Severity.HAZARD

    def check(self, x: InstructionSequence, graph: nx.DiGraph) -> list[Violation]:
        reachable = reachable_positions(graph)
        if any(x.instructions[p - 1].kind == InstructionKind.HALT for p in reachable):
            return []
        return [
            Violation(
                rule=self.rule_id,
                message="no reachable termination instruction",
                severity=self.severity,
            )
        ]


class DeadStoreRule:
    rule_id = RuleId.DEAD_STORE.value
    severity = Severity.STYLE

    def check(self, x: InstructionSequence, graph: nx.DiGraph) -> list[Violation]:
        violations = []
        for p, ins in enumerate(x.instructions, start=1):
            if ins.kind != InstructionKind.BASIC or not (ins.method or "").startswith("set"):
                continue
            overwrite = self._overwrite(x, graph, p, ins.focus or "")
            if overwrite is not None:
                violations.append(
                    Violation(
                        rule=self.rule_id,
                        positions=(p, overwrite),
                        message=f"{ins.focus} set at {p} is overwritten at {overwrite} unread",
                        severity=self.severity,
                    )
                )
        return violations

    @staticmethod
    def _overwrite(x: InstructionSequence, graph: nx.DiGraph, p: int, register: str) -> int | None:
        """Follow the unique successor chain from ``p`` looking for a blind rewrite."""
        seen = {p}
        current = p
        while graph.out_degree(current) == 1:
            (current,) = graph.successors(current)
            if current in seen:
                return None
            seen.add(current)
            ins = x.instructions[current - 1]
            if ins.is_test or ins.kind == InstructionKind.HALT:
                return None
            if ins.focus == register:
                if ins.kind == InstructionKind.BASIC and (ins.method or "").startswith("set"):
                    return current
                return None
        return None


RULES: dict[str, LintRule] = {
    rule.rule_id: rule
    for rule in (
        UnreachableRule(),
        OutOfRangeJumpRule(),
        JumpChainRule(),
        NoHaltRule(),
        DeadStoreRule(),
    )
}


def _resolve(rules: Sequence[str | LintRule] | None) -> list[LintRule]:
    if rules is None:
        return list(RULES.values())
    resolved: list[LintRule] = []
    for rule in rules:
        if isinstance(rule, str):
            if rule not in RULES:
                raise ViewError(
                    f"unknown lint rule {rule!r}",
                    {"rule": rule, "known": list(RULES)},
                )
            resolved.append(RULES[rule])
        else:
            resolved.append(rule)
    return resolved


def lint(
    x: InstructionSequence,
    rules: Sequence[str | LintRule] | None = None,
) -> list[Violation]:
    """
    Apply lint rules to a sequence.

    Args:
        x: Sequence under review
        rules: Rule ids or rule objects; all shipped rules when omitted

    Returns:
        Violations ordered by first position, then rule id

    Raises:
        ViewError: Unknown rule id
    """
    selected = _resolve(rules)
    graph = position_graph(x)
    violations = [v for rule in selected for v in rule.check(x, graph)]
    violations.sort(key=lambda v: v.sort_key)
    logger.info("Lint of %s: %d violations", x.program_id, len(violations))
    return violations


def render_violations(violations: Sequence[Violation], fmt: str = "text") -> str:
    """Text report, or ``machine`` lines ``VIOLATION <rule> <positions>``."""
    if fmt == "machine":
        return "\n".join(v.render_machine() for v in violations)
    if fmt != "text":
        raise ViewError(f"unknown report format {fmt!r}", {"format": fmt})
    if not violations:
        return "no violations"
    return "\n".join(v.render() for v in violations)
