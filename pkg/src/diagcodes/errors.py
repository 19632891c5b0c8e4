"""Exceptions shared across modules."""


class BudgetExceeded(RuntimeError):
    """A node/step budget ran out before the computation finished."""


class SearchSpaceTooLarge(ValueError):
    """Exhaustive enumeration rejected as too big for the configured ceiling."""
