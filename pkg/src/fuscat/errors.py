"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A documented precondition on the input was violated (CLI exit code 2)."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; indicates a bug (CLI exit code 1)."""
