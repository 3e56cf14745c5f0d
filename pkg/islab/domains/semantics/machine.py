"""
Machine - Step-counted small-step effectuation under a semantics variant.

One step per processed instruction, jumps, tests and idle steps included.
Non-termination is detected exactly: the register space is finite, so a run
that does not halt revisits a (position, state) configuration.
"""

from __future__ import annotations

import logging

from islab.config.errors import SemanticsError
from islab.domains.isa import Instruction, InstructionKind, InstructionSequence

from .models import (
    ExcessPolicy,
    MachineState,
    Outcome,
    OutcomeKind,
    SemanticsVariant,
    StaticCheckResult,
    Trace,
    TraceStep,
)

logger = logging.getLogger(__name__)

__all__ = ["Machine", "effectuate", "static_check"]


def static_check(x: InstructionSequence) -> StaticCheckResult:
    """
    Flag every jump whose static target lies outside 1..len.

    Only per-instruction target arithmetic is performed; falling off the end
    would need control-path analysis and is not attempted.
    """
    n = len(x)
    low: list[int] = []
    high: list[int] = []
    for position, ins in enumerate(x.instructions, start=1):
        target = ins.jump_target(position)
        if target is None:
            continue
        if target < 1:
            low.append(position)
        elif target > n:
            high.append(position)
    return StaticCheckResult(low_violations=tuple(low), high_violations=tuple(high))


def _apply(ins: Instruction, registers: dict[str, int]) -> bool:
    """Register service: perform the method, return the boolean reply."""
    focus = ins.focus
    assert focus is not None
    method = ins.method
    if method == "get":
        return registers.get(focus, 0) == 1
    if method == "set:0":
        registers[focus] = 0
        return True
    if method == "set:1":
        registers[focus] = 1
        return True
    flipped = 1 - registers.get(focus, 0)
    registers[focus] = flipped
    return flipped == 1


def _ones(registers: dict[str, int]) -> frozenset[str]:
    """Canonical state key: unmapped and zero registers are indistinguishable."""
    return frozenset(name for name, bit in registers.items() if bit)


class Machine:
    """
    Interpreter for one semantics variant.

    Example:
        >>> machine = Machine(SemanticsVariant(high=ExcessPolicy.TERMINATE))
        >>> outcome, trace = machine.effectuate(parse_sequence("#5; !"), MachineState(), 10)
        >>> outcome.render()
        'Terminated {} steps=1'
    """

    def __init__(self, variant: SemanticsVariant | None = None) -> None:
        self.variant = variant or SemanticsVariant()

    def observe(self, x: InstructionSequence, d: MachineState, budget: int) -> Outcome:
        """Outcome only; lets a Machine serve as a black-box oracle."""
        return self.effectuate(x, d, budget)[0]

    def effectuate(
        self,
        x: InstructionSequence,
        d: MachineState,
        budget: int,
    ) -> tuple[Outcome, Trace]:
        """
        Run ``x`` from position 1 over ``d``.

        Args:
            x: Instruction sequence
            d: Input state
            budget: Maximum number of steps (>= 1)

        Returns:
            The outcome and the step trace
        """
        if budget < 1:
            raise SemanticsError(f"budget must be at least 1, got {budget}", {"budget": budget})

        variant = self.variant
        if variant.rejects_statically:
            check = static_check(x)
            offending = []
            if variant.low == ExcessPolicy.REJECT:
                offending.extend(check.low_violations)
            if variant.high == ExcessPolicy.REJECT:
                offending.extend(check.high_violations)
            if offending:
                logger.debug("Statically rejected at position %d", min(offending))
                return (
                    Outcome(kind=OutcomeKind.STATICALLY_REJECTED, steps=0, position=min(offending)),
                    Trace(),
                )

        n = len(x)
        registers = dict(d.registers)
        position = 1
        step = 0
        steps: list[TraceStep] = []
        seen = {(position, _ones(registers))}

        def snapshot() -> MachineState:
            return MachineState.model_construct(registers=dict(registers))

        def record(at: int | None, ins: Instruction | None) -> None:
            steps.append(
                TraceStep.model_construct(step=step, position=at, instruction=ins, state=snapshot())
            )

        def finish(kind: OutcomeKind, with_state: bool = False) -> tuple[Outcome, Trace]:
            outcome = Outcome.model_construct(
                kind=kind,
                steps=step,
                final=snapshot() if with_state else None,
                position=None,
            )
            return outcome, Trace.model_construct(steps=tuple(steps))

        while True:
            if step >= budget:
                outcome = Outcome(kind=OutcomeKind.BUDGET_EXHAUSTED, steps=budget)
                return outcome, Trace.model_construct(steps=tuple(steps))

            ins = x.instructions[position - 1]
            step += 1
            kind = ins.kind

            if kind == InstructionKind.HALT:
                record(position, ins)
                return finish(OutcomeKind.TERMINATED, with_state=True)

            if kind == InstructionKind.BASIC:
                _apply(ins, registers)
                target = position + 1
            elif kind == InstructionKind.POS_TEST:
                target = position + (1 if _apply(ins, registers) else 2)
            elif kind == InstructionKind.NEG_TEST:
                target = position + (2 if _apply(ins, registers) else 1)
            else:
                assert ins.offset is not None
                if ins.offset == 0:
                    record(position, ins)
                    return finish(OutcomeKind.DEADLOCK)
                target = ins.jump_target(position) or 0

            record(position, ins)

            if target > n or target < 1:
                policy = variant.high if target > n else variant.low
                if policy in (ExcessPolicy.DEADLOCK, ExcessPolicy.REJECT):
                    # A reject end only sees dynamic excess that jump arithmetic cannot flag.
                    return finish(OutcomeKind.DEADLOCK)
                if policy == ExcessPolicy.ERROR:
                    return finish(OutcomeKind.ERROR_HALT, with_state=True)
                if policy == ExcessPolicy.TERMINATE:
                    return finish(OutcomeKind.TERMINATED, with_state=True)
                if policy == ExcessPolicy.SKIP:
                    target = position + 1
                    if target > n:
                        return finish(OutcomeKind.TERMINATED, with_state=True)
                else:
                    # Livelock: the idle configuration repeats on the first idle step.
                    if step >= budget:
                        return (
                            Outcome(kind=OutcomeKind.BUDGET_EXHAUSTED, steps=budget),
                            Trace.model_construct(steps=tuple(steps)),
                        )
                    step += 1
                    record(None, None)
                    logger.debug("Idle livelock detected at step %d", step)
                    return finish(OutcomeKind.LIVELOCK)

            position = target
            configuration = (position, _ones(registers))
            if configuration in seen:
                logger.debug("Configuration repeated at step %d (position %d)", step, position)
                return finish(OutcomeKind.LIVELOCK)
            seen.add(configuration)


def effectuate(
    x: InstructionSequence,
    d: MachineState,
    v: SemanticsVariant,
    budget: int,
) -> tuple[Outcome, Trace]:
    """Functional entry point: ``Machine(v).effectuate(x, d, budget)``."""
    return Machine(v).effectuate(x, d, budget)
