"""Move commands: seeded random walks and trace replay."""

from argparse import Namespace
from pathlib import Path
from typing import TextIO

from app.config.environment import Settings
from app.dependencies import get_analysis_service, get_diagram_repository
from app.interfaces.cli.command_router import CommandRouter, arg
from app.interfaces.cli.exit_codes import ExitCode
from app.schemas.move_schema import MoveTraceSchema
from app.services.diagram_service import require_valid
from app.services.gauss_code_service import emit_gauss_code
from app.services.move_service import random_walk, replay

router = CommandRouter(tags=["moves"])


@router.command(
    "walk",
    summary="Apply random Reidemeister moves (and K-flypes) and print the result and its trace.",
    arguments=(
        arg("file", type=Path, help="diagram file"),
        arg("--steps", type=int, required=True, help="number of moves"),
        arg("--seed", type=int, default=None, help="generator seed (default VKNOT_SEED, else 0)"),
        arg("--flype", action="store_true", help="allow K-flypes"),
        arg("--max-chords", type=int, default=None, help="largest chord count an insertion may reach"),
    ),
)
def walk(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Print the canonical code of the walked diagram, then the trace as JSON."""
    diagram = require_valid(get_analysis_service(settings).load(args.file).diagram)
    seed = settings.default_seed if args.seed is None else args.seed
    result, trace = random_walk(
        diagram,
        args.steps,
        seed,
        allow_flype=args.flype,
        max_chords=args.max_chords,
        weights=settings.walk_weights,
    )
    print(emit_gauss_code(result), file=out)
    print(MoveTraceSchema.from_trace(trace).model_dump_json(), file=out)
    return ExitCode.OK


@router.command(
    "replay",
    summary="Replay a move trace on a diagram and print the canonical code.",
    arguments=(
        arg("file", type=Path, help="diagram file the trace started from"),
        arg("trace", type=Path, help="trace JSON written by walk"),
    ),
)
def replay_trace(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Apply the recorded steps in order."""
    diagram = require_valid(get_analysis_service(settings).load(args.file).diagram)
    trace = get_diagram_repository().load_trace(args.trace)
    print(emit_gauss_code(replay(diagram, trace)), file=out)
    return ExitCode.OK
