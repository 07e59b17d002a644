"""Logging utility module for the toolkit.

All records go to stderr so that command output on stdout stays deterministic.
"""
import logging
import sys
from functools import lru_cache

ROOT_LOGGER_NAME = "vknot"

_LEVEL_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[1;31m",
}
_RESET = "\033[0m"


class LevelColorFormatter(logging.Formatter):
    """Formatter that colours the level name when colour output is allowed."""

    def __init__(self, fmt: str, *, use_color: bool) -> None:
        """Initialize the formatter.

        Args:
            fmt (str): Log record format string.
            use_color (bool): Whether to wrap level names in ANSI colour codes.

        """
        super().__init__(fmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        """Format the record, colouring the level name if enabled."""
        if not self.use_color:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{_LEVEL_COLORS.get(record.levelno, '')}{original}{_RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


@lru_cache
def configure_logging(level: str = "WARNING", *, no_color: bool = False) -> logging.Logger:
    """Attach the stderr handler to the toolkit logger. Runs once per (level, no_color).

    Args:
        level (str): Logging level name, e.g. ``"INFO"``.
        no_color (bool): Disable ANSI colours (``NO_COLOR`` convention).

    Returns:
        logging.Logger: The configured root toolkit logger.

    """
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(level.upper())
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    use_color = not no_color and sys.stderr.isatty()
    handler.setFormatter(
        LevelColorFormatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s", use_color=use_color),
    )
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def get_logger(name: str | None = None) -> logging.Logger:
    """Get the toolkit logger, or one of its children.

    Args:
        name (str | None): Optional child name, e.g. ``"cover"`` gives ``vknot.cover``.

    Returns:
        logging.Logger: The logger instance for the toolkit.

    """
    root = logging.getLogger(ROOT_LOGGER_NAME)
    return root.getChild(name) if name else root
