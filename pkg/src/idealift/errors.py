"""Shared exception types."""


class TheoremViolation(RuntimeError):
    """A machine-checked structural claim failed.

    Raised when a recomputed quantity disagrees with what the construction
    guarantees (lifted-code parameters, distance formulas under trivial
    intersections, distribution closed forms). On a correct build this
    never fires; the verification CLI maps it to a nonzero exit.
    """


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""
