"""Exception types shared across the package."""


class ClassValidationError(ValueError):
    """The input graph is not in the class a construction requires."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed.

    Raised when a step the theory guarantees turns out to be unavailable,
    when a constructed set fails its final certification, or when a proven
    bound is exceeded.  Seeing this means a bug (or an input that slipped
    past validation), never a routine condition.
    """
