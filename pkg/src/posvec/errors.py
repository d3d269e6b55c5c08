"""Exceptions shared across the package."""


class BoundExceededError(RuntimeError):
    """An enumeration or closure computation would exceed its safety guard."""
