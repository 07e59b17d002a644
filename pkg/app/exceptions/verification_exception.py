"""Exceptions for the verification suites."""


class UnknownSuiteError(Exception):
    """Exception raised when a verification suite name is not registered."""

    def __init__(self, name: str) -> None:
        """Initialize with the unknown suite name."""
        self.name = name
        super().__init__(f"Unknown verification suite: {name}.")
