"""
Repair Alphabet - Deterministic candidate replacements for a fragment.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from islab.config.errors import ErrorCode, FaultError
from islab.domains.isa import (
    METHODS,
    Fragment,
    Instruction,
    InstructionSequence,
    Replacement,
    extract,
)

from .models import FaultBudgetConfig, RepairSearchConfig

__all__ = ["repair_alphabet", "enumerate_replacements"]


def repair_alphabet(x: InstructionSequence, search: RepairSearchConfig) -> tuple[Instruction, ...]:
    """
    Instruction templates available to repairs.

    Order: per register (program registers in first-use order, then the extra
    ones), per method, the basic action followed by its positive and negative
    test; then forward jumps ``#1..#len``, backward jumps if enabled, and ``!``.
    """
    registers = list(x.registers)
    registers.extend(r for r in search.registers if r not in registers)

    alphabet: list[Instruction] = []
    for register in registers:
        for method in METHODS:
            alphabet.append(Instruction.basic(register, method))
            alphabet.append(Instruction.pos_test(register, method))
            alphabet.append(Instruction.neg_test(register, method))
    if search.include_jumps:
        alphabet.extend(Instruction.fwd_jump(k) for k in range(1, len(x) + 1))
    if search.include_backward_jumps:
        alphabet.extend(Instruction.bwd_jump(k) for k in range(1, len(x) + 1))
    if search.include_halt:
        alphabet.append(Instruction.halt())
    return tuple(alphabet)


def _part_lengths(arity: int, total: int, max_part: int) -> Iterator[tuple[int, ...]]:
    for lengths in itertools.product(range(max_part + 1), repeat=arity):
        if sum(lengths) == total:
            yield lengths


def enumerate_replacements(
    x: InstructionSequence,
    f: Fragment,
    cfg: FaultBudgetConfig,
    search: RepairSearchConfig,
) -> Iterator[Replacement]:
    """
    Yield every replacement for ``f`` within the fix-length bound.

    Totals ascend; for each total, part-length vectors ascend
    lexicographically and instructions follow alphabet order. The identity
    replacement is skipped.

    Raises:
        FaultError: When the alphabet is empty
    """
    alphabet = repair_alphabet(x, search)
    if not alphabet:
        raise FaultError(
            "repair alphabet is empty",
            {"registers": list(search.registers)},
            code=ErrorCode.FAULT_EMPTY_ALPHABET,
        )
    identity = extract(x, f)

    for total in cfg.repair_lengths(f.total_length):
        for lengths in _part_lengths(f.arity, total, search.max_part_length):
            for word in itertools.product(alphabet, repeat=total):
                parts: list[tuple[Instruction, ...]] = []
                cursor = 0
                for length in lengths:
                    parts.append(tuple(word[cursor : cursor + length]))
                    cursor += length
                candidate = Replacement(parts=tuple(parts))
                if candidate != identity:
                    yield candidate
