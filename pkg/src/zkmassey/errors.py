"""Shared exception types."""


class InternalCheckError(RuntimeError):
    """A self-check that should be impossible to fail has failed."""
