"""
Program Generator - Seeded random instruction sequences for corpora and property checks.
"""

from __future__ import annotations

import random

from .models import METHODS, Instruction, InstructionKind, InstructionSequence

__all__ = ["random_program"]

_SERVICE_KINDS = (InstructionKind.BASIC, InstructionKind.POS_TEST, InstructionKind.NEG_TEST)


def random_program(
    rng: random.Random,
    length: int,
    registers: tuple[str, ...] = ("i", "o"),
    jump_rate: float = 0.25,
    halt_rate: float = 0.1,
    end_with_halt: bool = True,
) -> InstructionSequence:
    """
    Draw a program whose jumps all target positions inside 1..length.

    Args:
        rng: Source of randomness (seed it for reproducibility)
        length: Number of instructions (>= 1)
        registers: Register names for basic actions and tests
        jump_rate: Probability of a jump at positions that admit one
        halt_rate: Probability of a termination instruction
        end_with_halt: Force the last instruction to be ``!``

    Returns:
        A program that passes static target checking
    """
    instructions: list[Instruction] = []
    for position in range(1, length + 1):
        if end_with_halt and position == length:
            instructions.append(Instruction.halt())
            continue

        roll = rng.random()
        if roll < halt_rate:
            instructions.append(Instruction.halt())
        elif roll < halt_rate + jump_rate and length > 1:
            forward_room = length - position
            backward_room = position - 1
            if forward_room and (not backward_room or rng.random() < 0.6):
                instructions.append(Instruction.fwd_jump(rng.randint(1, forward_room)))
            else:
                instructions.append(Instruction.bwd_jump(rng.randint(1, backward_room)))
        else:
            kind = rng.choice(_SERVICE_KINDS)
            instructions.append(
                Instruction(kind=kind, focus=rng.choice(registers), method=rng.choice(METHODS))
            )
    return InstructionSequence(instructions=tuple(instructions))
