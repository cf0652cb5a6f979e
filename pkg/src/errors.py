# src/errors.py


class MaxGenusError(Exception):
    """Base error for the package."""


class WordError(MaxGenusError, ValueError):
    """Malformed surface word."""


class WordParseError(WordError):
    pass


class NonOrientableWordError(WordError):
    pass


class TransformError(MaxGenusError, ValueError):
    """A surface transform was applied where its precondition fails."""


class ReductionError(MaxGenusError):
    """Reduction reached a state that cannot occur for a valid orientable word."""


class GraphError(MaxGenusError, ValueError):
    """Invalid graph or graph operation."""


class DisconnectedGraphError(GraphError):
    pass


class VertexNotFoundError(GraphError):
    pass


class InvalidSpanningTreeError(GraphError):
    pass


class InvalidPartitionError(GraphError):
    pass


class EdgeListParseError(GraphError):
    pass


class RotationError(GraphError):
    """Rotation system does not match the graph."""


class BudgetExceededError(MaxGenusError):
    """Exhaustive enumeration would exceed the configured budget."""

    def __init__(self, systems: int, budget: int):
        self.systems = systems
        self.budget = budget
        super().__init__(
            f"{systems} rotation systems exceed the budget of {budget} (use --force to override)"
        )


class OracleMismatchError(MaxGenusError):
    """Two independent genus computations disagreed."""


class GenusParityError(MaxGenusError):
    """An Euler characteristic that gives no non-negative integer genus."""


class FamilySpecError(MaxGenusError, ValueError):
    pass


class LabelError(MaxGenusError, ValueError):
    """Family labels missing or inconsistent with the graph."""
