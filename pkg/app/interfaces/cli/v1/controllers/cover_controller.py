"""Cover command: the converted normal diagram and its provenance."""

from argparse import Namespace
from pathlib import Path
from typing import TextIO

from app.config.environment import Settings
from app.dependencies import get_analysis_service
from app.interfaces.cli.command_router import CommandRouter, arg
from app.interfaces.cli.exit_codes import ExitCode
from app.services.diagram_service import require_valid
from app.services.gauss_code_service import emit_gauss_code

router = CommandRouter(tags=["covers"])


@router.command(
    "cover",
    summary="Print the canonical code of the double cover and a provenance JSON report.",
    arguments=(
        arg("file", type=Path, help="diagram file"),
        arg("--cuts", default="auto", help="'auto' or a cut system file"),
    ),
)
def cover(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Build the cover of a diagram with its cut system."""
    service = get_analysis_service(settings)
    loaded = service.load(args.file)
    require_valid(loaded.diagram)
    result = service.cover(loaded, args.cuts)
    print(emit_gauss_code(result.diagram), file=out)
    print(service.cover_report(result).model_dump_json(by_alias=True), file=out)
    return ExitCode.OK
