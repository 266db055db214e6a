"""Exceptions shared across the package."""

__all__ = ["DomainError", "UnderdeterminedError"]


class DomainError(ValueError):
    """Raised for inputs outside the stable range, e.g. (g, n) = (0, 2) or (1, 0)."""


class UnderdeterminedError(RuntimeError):
    """Raised when a best-effort solver cannot pin down a value.

    This is an honest failure signal; it must never be silenced into a guess.
    """
