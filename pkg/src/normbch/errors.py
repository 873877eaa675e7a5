"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """A requested enumeration is larger than the configured budget.

    Carries the exact count that would be needed, so callers can decide
    to re-run with a deliberately raised budget.
    """

    def __init__(self, needed: int, budget: int, what: str = "subsets"):
        super().__init__(f"{needed} {what} needed, budget is {budget}")
        self.needed = needed
        self.budget = budget
        self.what = what
