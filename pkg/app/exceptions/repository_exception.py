"""Exceptions raised by the diagram repositories."""

from pathlib import Path


class DiagramFileNotFoundError(Exception):
    """Exception raised when an input file does not exist or cannot be read."""

    def __init__(self, path: Path) -> None:
        """Initialize with the path that could not be read."""
        self.path = path
        super().__init__(f"Cannot read file {path}.")


class DiagramFormatError(Exception):
    """Exception raised when a file's content cannot be read as the expected document."""

    def __init__(self, path: Path, reason: str) -> None:
        """Initialize with the path and what is wrong with its content."""
        self.path = path
        self.reason = reason
        super().__init__(f"Cannot read {path}: {reason}.")
