"""Exceptions for invariant computations."""


class StateLimitExceededError(Exception):
    """Exception raised when the bracket state sum would be too large."""

    def __init__(self, chords: int, limit: int) -> None:
        """Initialize with the chord count and the configured state limit."""
        self.chords = chords
        self.limit = limit
        super().__init__(f"State sum refused: {chords} chords exceeds the state limit of {limit}.")


class NonIntegralLinkingNumberError(Exception):
    """Exception raised when the linking number of a knot cover is not an integer."""

    def __init__(self, value: object) -> None:
        """Initialize with the offending value."""
        self.value = value
        super().__init__(f"Linking number of the cover is not an integer: {value}.")
