"""Resource budgets for enumeration, complexes, and feasibility checks."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_ELEMENTS = 2_000_000
DEFAULT_MAX_SIMPLICES = 500_000
DEFAULT_MAX_CONSTRAINTS = 20_000


@dataclass(frozen=True)
class Budgets:
    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_simplices: int = DEFAULT_MAX_SIMPLICES
    max_constraints: int = DEFAULT_MAX_CONSTRAINTS


DEFAULT_BUDGETS = Budgets()
