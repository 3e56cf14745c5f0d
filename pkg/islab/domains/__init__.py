"""
Domains - Business logic organized by concern.

- isa: Instruction sequences, fragments and substitution
- semantics: Step-counted effectuation under configurable excess handling
- testing: Confirmation tests, suites, specifications and the effectuation ledger
- faults: Mechanical fault certification, repair search and adequacy
- views: Linting, exhaustive verification, defect and process views
"""

__all__ = ["isa", "semantics", "testing", "faults", "views"]
