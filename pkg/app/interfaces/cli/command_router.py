"""A small router that groups argparse subcommands per controller module.

Controllers declare commands with ``@router.command(...)``; ``app.main`` includes
every router into the top-level parser, the way API routers are included in an app.
"""

import argparse
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, TextIO

from app.config.environment import Settings

CommandHandler = Callable[[argparse.Namespace, Settings, TextIO], int]


@dataclass(frozen=True)
class Argument:
    """Positional or optional argument, passed through to ``add_argument``."""

    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Argument:  # noqa: ANN401
    """Shorthand for :class:`Argument`."""
    return Argument(flags=flags, options=options)


@dataclass(frozen=True)
class Command:
    """A registered subcommand."""

    name: str
    summary: str
    arguments: tuple[Argument, ...]
    handler: CommandHandler


class CommandRouter:
    """Collects the subcommands of one controller module."""

    def __init__(self, tags: list[str] | None = None) -> None:
        """Initialize an empty router.

        Args:
            tags (list[str] | None): Labels for grouping in help output.

        """
        self.tags = tags or []
        self.commands: list[Command] = []

    def command(self, name: str, *, summary: str, arguments: tuple[Argument, ...] = ()) -> Callable:
        """Register the decorated function as subcommand ``name``."""

        def decorator(handler: CommandHandler) -> CommandHandler:
            self.commands.append(Command(name=name, summary=summary, arguments=arguments, handler=handler))
            return handler

        return decorator

    def include_into(self, subparsers: Any) -> None:  # noqa: ANN401
        """Add every command of this router to an argparse subparsers action."""
        for command in self.commands:
            parser = subparsers.add_parser(command.name, help=command.summary, description=command.summary)
            for argument in command.arguments:
                parser.add_argument(*argument.flags, **argument.options)
            parser.set_defaults(handler=command.handler)
