"""Shared exception types."""


class BudgetError(Exception):
    """An enumeration or search would exceed its configured budget."""


class ConsistencyError(Exception):
    """An internal exact invariant failed; indicates a bug, not bad input."""
