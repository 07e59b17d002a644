"""Main entry point of the vknot command line application.

This file builds the argument parser from the controller routers, applies the
command line overrides to the settings and maps domain errors to exit codes.
"""
import argparse
import sys
from typing import NoReturn, TextIO

from app.config.environment import Settings
from app.dependencies import get_env_settings
from app.exceptions.cut_system_exception import (
    CanonicalCutSystemError,
    CutMovePreconditionError,
    CutSystemSearchError,
    InvalidCutSystemError,
)
from app.exceptions.diagram_exception import (
    ComponentCountError,
    GaussCodeSyntaxError,
    InvalidDiagramError,
    NotAKnotError,
    PDCodeSyntaxError,
)
from app.exceptions.invariant_exception import NonIntegralLinkingNumberError, StateLimitExceededError
from app.exceptions.move_exception import MovePatternMismatchError, UnknownChordError
from app.exceptions.repository_exception import DiagramFileNotFoundError, DiagramFormatError
from app.exceptions.verification_exception import UnknownSuiteError
from app.interfaces.cli.exit_codes import ExitCode
from app.interfaces.cli.v1.controllers.cover_controller import router as cover_router
from app.interfaces.cli.v1.controllers.cut_system_controller import router as cut_system_router
from app.interfaces.cli.v1.controllers.diagram_controller import router as diagram_router
from app.interfaces.cli.v1.controllers.move_controller import router as move_router
from app.interfaces.cli.v1.controllers.verify_controller import router as verify_router
from app.utils.logger_util import configure_logging, get_logger

logger = get_logger("cli")

ERROR_EXIT_CODES: tuple[tuple[type[Exception], ExitCode], ...] = (
    (UnknownSuiteError, ExitCode.USAGE),
    (DiagramFileNotFoundError, ExitCode.FILE_ERROR),
    (StateLimitExceededError, ExitCode.STATE_LIMIT),
    (InvalidDiagramError, ExitCode.INVALID),
    (InvalidCutSystemError, ExitCode.INVALID),
    (CutMovePreconditionError, ExitCode.INVALID),
    (MovePatternMismatchError, ExitCode.INVALID),
    (UnknownChordError, ExitCode.INVALID),
    (GaussCodeSyntaxError, ExitCode.DATA_ERROR),
    (PDCodeSyntaxError, ExitCode.DATA_ERROR),
    (DiagramFormatError, ExitCode.DATA_ERROR),
    (NotAKnotError, ExitCode.DATA_ERROR),
    (ComponentCountError, ExitCode.DATA_ERROR),
    (CutSystemSearchError, ExitCode.DATA_ERROR),
    (CanonicalCutSystemError, ExitCode.INTERNAL),
    (NonIntegralLinkingNumberError, ExitCode.INTERNAL),
)


class UsageError(Exception):
    """Exception raised by the argument parser instead of exiting."""

    def __init__(self, message: str) -> None:
        """Initialize with the parser's message."""
        self.message = message
        super().__init__(message)


class VknotArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as exceptions (exit code 64)."""

    def error(self, message: str) -> NoReturn:
        """Raise instead of printing and exiting with status 2."""
        raise UsageError(f"{self.prog}: {message}")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """Create the top-level parser with every controller's commands."""
    parser = VknotArgumentParser(prog=settings.app_name, description=settings.app_description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parser.add_argument("--log-level", default=None, help="logging level (default VKNOT_LOG_LEVEL, else WARNING)")
    parser.add_argument("--no-color", action="store_true", help="disable coloured log output")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for verify and ingest")
    parser.add_argument("--state-limit", type=int, default=None, help="largest chord count for the state sum")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for router in (diagram_router, cut_system_router, cover_router, move_router, verify_router):
        router.include_into(subparsers)
    return parser


def _apply_overrides(settings: Settings, args: argparse.Namespace) -> Settings:
    overrides = {
        "log_level": args.log_level,
        "workers": args.workers,
        "state_limit": args.state_limit,
        "no_color": True if args.no_color else None,
    }
    return settings.model_copy(update={k: v for k, v in overrides.items() if v is not None})


def run(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    """Run one command.

    Args:
        argv (list[str] | None): Arguments without the program name; defaults to ``sys.argv[1:]``.
        out (TextIO | None): Stream for command output; defaults to stdout.

    Returns:
        int: The exit code.

    """
    out = out or sys.stdout
    settings = get_env_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e.message, file=sys.stderr)
        return ExitCode.USAGE
    except SystemExit as e:
        return int(e.code or 0)
    settings = _apply_overrides(settings, args)
    configure_logging(settings.log_level, no_color=settings.no_color)
    try:
        return int(args.handler(args, settings, out))
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE
    except Exception as e:
        for error_type, code in ERROR_EXIT_CODES:
            if isinstance(e, error_type):
                logger.debug("%s mapped to exit code %d", type(e).__name__, code)
                print(f"error: {e}", file=sys.stderr)
                return code
        raise


def main() -> NoReturn:
    """Console script entry point."""
    sys.exit(run())
