"""Controllers for CLI v1 commands."""
