"""Exception hierarchy shared by all modules."""


class GenusDistError(Exception):
    pass


class DomainError(GenusDistError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ConsistencyError(GenusDistError, AssertionError):
    """An internal identity failed; signals a formula or implementation bug."""


class BudgetExceededError(GenusDistError):
    """Exhaustive search refused because the space is larger than the budget."""

    def __init__(self, size, budget, what="search space"):
        self.size = size
        self.budget = budget
        super().__init__(f"{what} has {size} elements, exceeds budget {budget}")


class NotEulerianError(GenusDistError, ValueError):
    pass


class NotAFanError(GenusDistError, ValueError):
    pass
