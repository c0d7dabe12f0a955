"""Shared error types and the explicit resource-budget guard.

Budgets are always explicit call parameters, never ambient globals: every
enumeration or search that can blow up takes a limit and fails with a
projection of the work it refused to do.
"""

from __future__ import annotations

# Default cap on enumerated items / DP states / search nodes. Large enough
# for every desk-scale run in the test suite, small enough to refuse
# accidentally huge instances quickly.
DEFAULT_BUDGET = 1 << 22


class ParseError(ValueError):
    """Malformed textual input (vertex strings, instance files, CLI sets)."""


class BudgetExceededError(RuntimeError):
    """An operation projected more work than its budget allows."""

    def __init__(self, what: str, projected: int, limit: int):
        self.what = what
        self.projected = projected
        self.limit = limit
        super().__init__(
            f"{what}: projected {projected} units exceeds budget {limit}"
        )


def check_budget(what: str, projected: int, limit: int) -> None:
    """Raise BudgetExceededError if projected work exceeds the limit."""
    if projected > limit:
        raise BudgetExceededError(what, projected, limit)
