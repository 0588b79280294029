class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its node budget before finishing."""

    def __init__(self, message: str, nodes: int, budget: int):
        super().__init__(message)
        self.nodes = nodes
        self.budget = budget
