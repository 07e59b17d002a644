"""Exceptions for Reidemeister moves and K-flypes."""


class MovePatternMismatchError(Exception):
    """Exception raised when the chords given to a move do not form its local pattern."""

    def __init__(self, move: str, reason: str) -> None:
        """Initialize with the move name and the mismatch description."""
        self.move = move
        self.reason = reason
        super().__init__(f"{move}: {reason}.")


class UnknownChordError(Exception):
    """Exception raised when a move refers to a chord that does not exist."""

    def __init__(self, chord_id: int) -> None:
        """Initialize with the missing chord id."""
        self.chord_id = chord_id
        super().__init__(f"Chord {chord_id} does not exist.")
