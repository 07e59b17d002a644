"""Exceptions raised while parsing, validating or querying diagrams."""

from collections.abc import Sequence


class GaussCodeSyntaxError(Exception):
    """Exception raised when a signed Gauss code cannot be parsed."""

    def __init__(self, text: str, position: int, reason: str) -> None:
        """Initialize with the offending text, the character position and the reason.

        Args:
            text (str): The Gauss code that failed to parse.
            position (int): Zero-based character offset of the problem.
            reason (str): Human readable description of the problem.

        """
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"Gauss code error at position {position}: {reason}")


class PDCodeSyntaxError(Exception):
    """Exception raised when a PD code cannot be parsed or does not close up."""

    def __init__(self, line_number: int | None, reason: str) -> None:
        """Initialize with the line number (None for whole-input problems) and the reason."""
        self.line_number = line_number
        self.reason = reason
        where = f"line {line_number}" if line_number is not None else "input"
        super().__init__(f"PD code error at {where}: {reason}")


class InvalidDiagramError(Exception):
    """Exception raised when a Gauss diagram violates its structural invariants."""

    def __init__(self, violations: Sequence[str]) -> None:
        """Initialize with the list of violated invariants."""
        self.violations = tuple(violations)
        super().__init__("Invalid Gauss diagram: " + "; ".join(self.violations))


class NotAKnotError(Exception):
    """Exception raised when a knot (single circle) is required."""

    def __init__(self, circle_count: int) -> None:
        """Initialize with the number of circles of the offending diagram."""
        self.circle_count = circle_count
        super().__init__(f"Expected a knot diagram (1 circle), got {circle_count} circles.")


class ComponentCountError(Exception):
    """Exception raised when a diagram has the wrong number of components."""

    def __init__(self, expected: int, actual: int) -> None:
        """Initialize with the expected and the actual component count."""
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected {expected} components, got {actual}.")
