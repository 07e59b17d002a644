"""Verify command: seeded theorem and oracle suites."""

from argparse import Namespace
from typing import TextIO

from app.config.environment import Settings
from app.dependencies import get_verification_service
from app.interfaces.cli.command_router import CommandRouter, arg
from app.interfaces.cli.exit_codes import ExitCode

router = CommandRouter(tags=["verification"])


@router.command(
    "verify",
    summary="Run a verification suite and print its JSON report; exit 4 on failures.",
    arguments=(
        arg("suite", help="suite name, e.g. thm-lkN-equals-odd-writhe"),
        arg("--trials", type=int, default=100, help="number of trials (default 100)"),
        arg("--seed", type=int, default=None, help="base seed (default VKNOT_SEED, else 0)"),
        arg("--max-chords", type=int, default=8, help="largest chord count of random diagrams (default 8)"),
        arg("--timing", action="store_true", help="add the elapsed time to the report (default VKNOT_TIMING)"),
    ),
)
def verify(args: Namespace, settings: Settings, out: TextIO) -> int:
    """Run one suite."""
    seed = settings.default_seed if args.seed is None else args.seed
    report = get_verification_service(settings).run_suite(
        args.suite,
        args.trials,
        seed,
        args.max_chords,
        timing=args.timing or settings.timing,
    )
    print(report.model_dump_json(by_alias=True, exclude_none=True), file=out)
    return ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED
