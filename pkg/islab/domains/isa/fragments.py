"""
Fragments - Extraction, substitution and enumeration of n-located fragments.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from islab.config.errors import ErrorCode, SequenceError

from .models import Fragment, Instruction, InstructionSequence, Replacement

logger = logging.getLogger(__name__)

__all__ = ["check_fragment", "extract", "substitute", "enumerate_fragments"]


def check_fragment(x: InstructionSequence, f: Fragment) -> None:
    """Raise if ``f`` reaches past the end of ``x``."""
    if not f.fits(len(x)):
        raise SequenceError(
            f"fragment {f.render()} out of bounds for sequence of length {len(x)}",
            {"fragment": f.render(), "length": len(x)},
            code=ErrorCode.SEQUENCE_FRAGMENT_OUT_OF_BOUNDS,
        )


def extract(x: InstructionSequence, f: Fragment) -> Replacement:
    """The instructions under each part of ``f``, as an identity replacement."""
    check_fragment(x, f)
    return Replacement(parts=tuple(x.instructions[lo - 1 : hi] for lo, hi in f.parts))


def substitute(x: InstructionSequence, f: Fragment, r: Replacement) -> InstructionSequence:
    """
    Splice each fragment part out of ``x`` and the matching replacement part in.

    Args:
        x: Host sequence
        f: Fragment valid for x
        r: Replacement with the same arity as f

    Returns:
        The transformed sequence x'

    Raises:
        SequenceError: Arity mismatch, fragment out of bounds, or empty result
    """
    if r.arity != f.arity:
        raise SequenceError(
            f"replacement has {r.arity} part(s), fragment has {f.arity}",
            {"fragment_arity": f.arity, "replacement_arity": r.arity},
            code=ErrorCode.SEQUENCE_ARITY_MISMATCH,
        )
    check_fragment(x, f)

    result: list[Instruction] = []
    cursor = 1
    for (lo, hi), part in zip(f.parts, r.parts, strict=True):
        result.extend(x.instructions[cursor - 1 : lo - 1])
        result.extend(part)
        cursor = hi + 1
    result.extend(x.instructions[cursor - 1 :])

    if not result:
        raise SequenceError(
            "substitution deletes every instruction",
            code=ErrorCode.SEQUENCE_EMPTY_RESULT,
        )
    return InstructionSequence(instructions=tuple(result))


def enumerate_fragments(
    x: InstructionSequence,
    max_total_len: int,
    max_parts: int,
) -> Iterator[Fragment]:
    """
    Yield every fragment of ``x`` within the part and length bounds, once each.

    Order is lexicographic on the part boundaries: a family is yielded before
    any family extending it, e.g. ``1``, ``1,2``, ``1,3``, ..., ``1-2``, ...

    Args:
        x: Host sequence
        max_total_len: Upper bound on the summed part lengths (>= 1)
        max_parts: Upper bound on the number of parts (>= 1)
    """
    if max_total_len < 1 or max_parts < 1:
        raise SequenceError(
            "fragment bounds must be at least 1",
            {"max_total_len": max_total_len, "max_parts": max_parts},
        )
    n = len(x)

    def extend(
        prefix: tuple[tuple[int, int], ...], start: int, budget: int
    ) -> Iterator[Fragment]:
        for lo in range(start, n + 1):
            for hi in range(lo, min(n, lo + budget - 1) + 1):
                parts = (*prefix, (lo, hi))
                yield Fragment.model_construct(parts=parts)
                if len(parts) < max_parts:
                    yield from extend(parts, hi + 1, budget - (hi - lo + 1))

    yield from extend((), 1, max_total_len)
