"""Shared exception types."""


class OperadLabError(Exception):
    """Base class for all library errors."""


class DimensionError(OperadLabError):
    """Mismatched vertex counts, cube dimensions, or axis indices."""


class DomainError(OperadLabError):
    """Input is outside the domain of the requested operation."""


class BudgetError(OperadLabError):
    """A configured resource bound would be exceeded.

    Carries the name of the bound so callers can report which budget to
    raise.
    """

    def __init__(self, bound_name: str, bound: int, requested: int):
        self.bound_name = bound_name
        self.bound = bound
        self.requested = requested
        super().__init__(
            f"budget '{bound_name}' exceeded: need {requested}, bound is {bound}"
        )
