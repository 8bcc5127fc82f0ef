"""Shared error types."""


class ResourceCapError(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""

    def __init__(self, what, limit):
        super().__init__(f"{what} exceeds the enumeration cap {limit}")
        self.what = what
        self.limit = limit
