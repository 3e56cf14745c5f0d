"""
Variants - The space of excess-handling semantics and its discrimination by testing.

Six policies per end give 36 operational meanings. Their differences show up
only in marginal cases, so running probes that provoke excess is the way to
find out which meaning a platform implements.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

from islab.config.errors import ErrorCode, SemanticsError
from islab.domains.isa import InstructionSequence

from .contracts import Effectuator
from .machine import Machine
from .models import ExcessPolicy, MachineState, SemanticsVariant

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_VARIANT",
    "parse_variant",
    "enumerate_variants",
    "discriminate_variant",
]

DEFAULT_VARIANT = SemanticsVariant(low=ExcessPolicy.DEADLOCK, high=ExcessPolicy.DEADLOCK)


def parse_variant(text: str) -> SemanticsVariant:
    """Parse ``low=<policy>,high=<policy>``; either key may be omitted."""
    values: dict[str, ExcessPolicy] = {}
    for item in filter(None, (chunk.strip() for chunk in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in ("low", "high") or key in values:
            raise SemanticsError(
                f"malformed variant {text!r}",
                {"variant": text},
                code=ErrorCode.SEMANTICS_INVALID_VARIANT,
            )
        try:
            values[key] = ExcessPolicy(value.strip())
        except ValueError as e:
            raise SemanticsError(
                f"unknown excess policy {value.strip()!r}",
                {"allowed": [p.value for p in ExcessPolicy]},
                code=ErrorCode.SEMANTICS_INVALID_VARIANT,
            ) from e
    return SemanticsVariant(**values)


def enumerate_variants() -> list[SemanticsVariant]:
    """All 36 variants, low policy major, in policy declaration order."""
    return [
        SemanticsVariant(low=low, high=high)
        for low, high in itertools.product(ExcessPolicy, ExcessPolicy)
    ]


def discriminate_variant(
    oracle: Effectuator,
    probes: Sequence[tuple[InstructionSequence, MachineState]],
    budget: int = 100,
) -> list[SemanticsVariant]:
    """
    Keep the variants whose predictions match the oracle on every probe.

    Args:
        oracle: Black-box effectuation platform
        probes: Non-empty list of (program, input) pairs
        budget: Step budget per probe

    Returns:
        Matching variants in enumeration order; empty when the platform
        behaves like none of the 36 (an out-of-model machine)
    """
    if not probes:
        raise SemanticsError(
            "at least one probe is required",
            code=ErrorCode.SEMANTICS_INVALID_VARIANT,
        )

    observed = [oracle.observe(x, d, budget).signature for x, d in probes]
    candidates = []
    for variant in enumerate_variants():
        machine = Machine(variant)
        predicted = [machine.observe(x, d, budget).signature for x, d in probes]
        if predicted == observed:
            candidates.append(variant)

    if not candidates:
        logger.warning("No variant matches the oracle on %d probes", len(probes))
    else:
        logger.info("%d of 36 variants remain after %d probes", len(candidates), len(probes))
    return candidates
