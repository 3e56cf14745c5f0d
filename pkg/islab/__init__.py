"""
islab - Instruction-sequence fault laboratory.

Example:
    >>> from islab.domains.isa import parse_sequence
    >>> from islab.domains.semantics import Machine, MachineState
    >>> outcome, _ = Machine().effectuate(parse_sequence("o.set:1; !"), MachineState(), 10)
    >>> outcome.render()
    'Terminated {o=1} steps=2'
"""

__version__ = "0.1.0"
__all__ = ["__version__"]
