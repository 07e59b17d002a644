"""Exceptions for cut systems and cut point moves."""


class InvalidCutSystemError(Exception):
    """Exception raised when a set of cut points is not a cut system of the diagram."""

    def __init__(self, reason: str = "the points do not admit an alternate orientation") -> None:
        """Initialize with the reason the cut system was rejected."""
        self.reason = reason
        super().__init__(f"Not a cut system: {reason}.")


class CutMovePreconditionError(Exception):
    """Exception raised when a cut point move cannot be applied."""

    def __init__(self, move: str, reason: str) -> None:
        """Initialize with a description of the move and why it is illegal."""
        self.move = move
        self.reason = reason
        super().__init__(f"Cannot apply {move}: {reason}.")


class CanonicalCutSystemError(Exception):
    """Exception raised when the canonical cut system fails its own check.

    This is never a legal outcome; it means the placement convention is broken.
    """

    def __init__(self) -> None:
        """Initialize the exception with a fixed message."""
        super().__init__("Canonical cut system was rejected by the alternate orientation check.")


class CutSystemSearchError(Exception):
    """Exception raised when the bounded cut-system search finds nothing."""

    def __init__(self, max_total: int) -> None:
        """Initialize with the total bound the search used."""
        self.max_total = max_total
        super().__init__(
            f"No cut system with at most {max_total} points found; supply PD input to use the canonical one.",
        )
