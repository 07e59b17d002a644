"""Diagram commands: parsing, involutions, invariant reports and table ingestion."""

from argparse import Namespace
from pathlib import Path
from typing import TextIO

from app.config.environment import Settings
from app.dependencies import get_analysis_service, get_diagram_repository
from app.interfaces.cli.command_router import CommandRouter, arg
from app.interfaces.cli.exit_codes import ExitCode
from app.models.cut_system_model import CutSystem
from app.schemas.diagram_schema import DiagramDocument
from app.services.diagram_service import mirror, mirror_switch, require_valid, switch_all, validate
from app.services.gauss_code_service import canonicalize, emit_gauss_code
from app.services.pd_code_service import format_pd_code

router = CommandRouter(tags=["diagrams"])


@router.command(
    "parse",
    summary="Print the canonical Gauss code of a diagram and check it.",
    arguments=(
        arg("file", type=Path, help="Gauss code, PD code or diagram JSON file"),
        arg("--json", action="store_true", help="also print the canonical diagram JSON"),
        arg("--pd", action="store_true", help="also print the PD records of a PD input"),
    ),
)
def parse_diagram(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Parse a diagram file; exit 2 when the diagram breaks a structural invariant."""
    loaded = get_analysis_service(settings).load(args.file)
    violations = validate(loaded.diagram)
    if violations:
        for violation in violations:
            print(f"invalid: {violation}", file=out)
        return ExitCode.INVALID
    print(emit_gauss_code(loaded.diagram), file=out)
    if args.json:
        diagram, cuts = canonicalize(loaded.diagram, loaded.cuts)
        print(DiagramDocument.from_domain(diagram, cuts).model_dump_json(), file=out)
    if args.pd and loaded.pd is not None:
        print(format_pd_code(loaded.pd), file=out)
    print("valid", file=out)
    return ExitCode.OK


@router.command(
    "transform",
    summary="Apply a global involution and print the canonical code.",
    arguments=(
        arg("file", type=Path, help="diagram file"),
        arg(
            "--involution",
            choices=("switch", "mirror", "mirror-switch"),
            required=True,
            help="switch all crossings, mirror, or both",
        ),
    ),
)
def transform_diagram(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Print the switched, mirrored or mirror-switched diagram."""
    loaded = get_analysis_service(settings).load(args.file)
    diagram = require_valid(loaded.diagram)
    match args.involution:
        case "switch":
            result = switch_all(diagram)
        case "mirror":
            result = mirror(diagram)
        case _:
            result, _ = mirror_switch(diagram, loaded.cuts or CutSystem.empty())
    print(emit_gauss_code(result), file=out)
    return ExitCode.OK


@router.command(
    "invariants",
    summary="Print writhe, odd writhe, normality, lk_N and the f-polynomial as JSON.",
    arguments=(
        arg("file", type=Path, help="diagram file"),
        arg("--cuts", default="auto", help="'auto' or a cut system file (used for lk_N)"),
    ),
)
def invariants(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Report the invariants of a diagram."""
    service = get_analysis_service(settings)
    loaded = service.load(args.file)
    require_valid(loaded.diagram)
    report = service.invariants(loaded, args.cuts)
    print(report.model_dump_json(by_alias=True, exclude_none=True), file=out)
    return ExitCode.OK


@router.command(
    "ingest",
    summary="Compute invariants for every code of a knot table and print CSV.",
    arguments=(arg("table", type=Path, help="file with one signed Gauss code per line"),),
)
def ingest(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Print ``name,oddWrithe,lkN,f,normal`` rows in table order."""
    service = get_analysis_service(settings)
    entries = get_diagram_repository().load_table(args.table)
    for entry in entries:
        require_valid(entry.diagram)
    out.write(service.to_csv(service.ingest(entries)))
    return ExitCode.OK
