"""
Semantics Contracts - Interfaces for semantics domain.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

from islab.domains.isa import InstructionSequence

from .models import MachineState, Outcome


@runtime_checkable
class Effectuator(Protocol):
    """
    Contract for anything that puts instruction sequences into effect.

    A :class:`~islab.domains.semantics.machine.Machine` satisfies it, and so
    does any black-box platform whose operational meaning is unknown.

    Example:
        >>> class Platform:
        ...     def observe(self, x, d, budget):
        ...         ...
        >>> assert isinstance(Platform(), Effectuator)
    """

    def observe(self, x: InstructionSequence, d: MachineState, budget: int) -> Outcome:
        """
        Effectuate ``x`` on ``d`` and report what was observed.

        Args:
            x: Instruction sequence
            d: Input state
            budget: Step budget

        Returns:
            The observed outcome
        """
        ...
