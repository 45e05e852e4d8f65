"""Error types shared across the package."""


class NonConvergenceError(RuntimeError):
    """An iterative numerical procedure failed to reach its tolerance."""


class IllConditionedError(RuntimeError):
    """A matrix factorization failed or a condition number exceeded its cap."""
