"""
Semantics Domain - Step-counted effectuation under 36 excess-handling variants.

Exports:
    - Machine, effectuate, static_check: The interpreter
    - enumerate_variants, parse_variant, discriminate_variant: The variant space
    - Effectuator: Black-box platform contract
    - SemanticsVariant, ExcessPolicy, MachineState, Outcome, Trace: Data models
"""

from .contracts import Effectuator
from .machine import Machine, effectuate, static_check
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
from .variants import DEFAULT_VARIANT, discriminate_variant, enumerate_variants, parse_variant

__all__ = [
    # Contracts
    "Effectuator",
    # Interpreter
    "Machine",
    "effectuate",
    "static_check",
    # Variants
    "DEFAULT_VARIANT",
    "enumerate_variants",
    "parse_variant",
    "discriminate_variant",
    # Models
    "ExcessPolicy",
    "SemanticsVariant",
    "MachineState",
    "Outcome",
    "OutcomeKind",
    "StaticCheckResult",
    "Trace",
    "TraceStep",
]
