class PreconditionError(ValueError):
    """Input violates an operation's stated precondition."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured budget; nothing was computed."""

    def __init__(self, what: str, needed: int, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: needs {needed} items, budget is {budget}")


def check_budget(what: str, needed: int, budget: int | None) -> None:
    if budget is not None and needed > budget:
        raise BudgetExceeded(what, needed, budget)
