"""
Exception hierarchy for keyslide.
Every error carries a one-line message suitable for a CLI diagnostic.
"""


class KeySlideError(Exception):
    """Base class for all keyslide errors."""


class UsageError(KeySlideError, ValueError):
    """Raised when an operation is called outside its preconditions."""


class CompositionParseError(UsageError):
    """Raised when a composition string such as "0,,3" cannot be parsed."""


class BoundExceededError(KeySlideError):
    """Raised when an enumeration would exceed a configured resource bound."""

    def __init__(self, bound: str, limit: int, value: int):
        self.bound = bound
        self.limit = limit
        self.value = value
        super().__init__(
            f"enumeration bound exceeded: {bound} = {value} > {limit} "
            f"(raise it with the matching flag or environment variable, "
            f"or pass --unsafe-bounds)"
        )
