"""Cut system commands: finding, checking and connecting cut systems."""

import json
from argparse import Namespace
from pathlib import Path
from typing import TextIO

from app.config.environment import Settings
from app.dependencies import get_analysis_service, get_diagram_repository
from app.interfaces.cli.command_router import CommandRouter, arg
from app.interfaces.cli.exit_codes import ExitCode
from app.schemas.move_schema import CutMoveSchema
from app.services.cut_system_service import alternate_orientation, find_move_path, sinks_and_sources
from app.services.diagram_service import require_valid

router = CommandRouter(tags=["cut systems"])


@router.command(
    "find-cuts",
    summary="Print a cut system as JSON [[circle, gap, count], ...].",
    arguments=(arg("file", type=Path, help="diagram file; PD input gives the canonical cut system"),),
)
def find_cuts(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Resolve the automatic cut system of a diagram and print it."""
    service = get_analysis_service(settings)
    loaded = service.load(args.file)
    require_valid(loaded.diagram)
    cuts = service.resolve_cuts(loaded)
    print(json.dumps([[g.circle, g.index, n] for g, n in cuts.counts]), file=out)
    return ExitCode.OK


@router.command(
    "check-cut",
    summary="Check whether points form a cut system; exit 2 when they do not.",
    arguments=(
        arg("file", type=Path, help="diagram file"),
        arg("cuts", type=Path, help="cut system file"),
    ),
)
def check_cut(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Print the sink and source endpoints of every chord when the points form a cut system."""
    diagram = require_valid(get_analysis_service(settings).load(args.file).diagram)
    cuts = get_diagram_repository().load_cut_system(args.cuts)
    orientation = alternate_orientation(diagram, cuts)
    if orientation is None:
        print("not a cut system", file=out)
        return ExitCode.INVALID
    print(f"cut system with {cuts.total} points", file=out)
    for chord_id, (tail, head) in sinks_and_sources(diagram, orientation).items():
        print(f"chord {chord_id}: tail {tail}, head {head}", file=out)
    return ExitCode.OK


@router.command(
    "cut-path",
    summary="Search a shortest sequence of cut point moves between two cut systems.",
    arguments=(
        arg("file", type=Path, help="diagram file"),
        arg("start", type=Path, help="first cut system file"),
        arg("goal", type=Path, help="second cut system file"),
        arg("--depth", type=int, default=4, help="longest path searched (default 4)"),
        arg("--cap", type=int, default=2, help="largest count per gap (default 2)"),
    ),
)
def cut_path(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Print the moves as a JSON list, or NOT_FOUND with exit 3."""
    diagram = require_valid(get_analysis_service(settings).load(args.file).diagram)
    repository = get_diagram_repository()
    start, goal = repository.load_cut_system(args.start), repository.load_cut_system(args.goal)
    path = find_move_path(diagram, start, goal, args.depth, args.cap)
    if path is None:
        print("NOT_FOUND", file=out)
        return ExitCode.NOT_FOUND
    moves = [CutMoveSchema.from_move(move).model_dump(exclude_none=True, mode="json") for move in path]
    print(json.dumps(moves), file=out)
    return ExitCode.OK
