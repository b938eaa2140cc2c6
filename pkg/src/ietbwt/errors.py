"""Shared exception types."""


class DomainError(ValueError):
    """Invalid input: malformed value, point outside domain, unknown letter."""


class CapExceeded(RuntimeError):
    """An iteration budget ran out before the search finished."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap
