"""Seeded verification suites that check the cover theorems and the oracles on random diagrams.

Every trial draws its data from ``random.Random(seed * 1_000_003 + trial)``, so a
failure record is enough to reproduce it, and trials can run on a worker pool
without changing the report.
"""

import random
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from app.config.environment import Settings
from app.exceptions.verification_exception import UnknownSuiteError
from app.models.cut_system_model import CutMove, CutSystem
from app.models.gauss_diagram_model import GaussDiagram, Sign
from app.models.laurent_polynomial_model import A, LOOP_VALUE, LaurentPolynomial
from app.schemas.report_schema import VerificationFailure, VerificationReport
from app.services.cut_system_service import (
    apply_cut_move,
    canonical_cut_system,
    condition_star,
    find_move_path,
    is_cut_system,
    is_normal,
    neighbors,
    random_cut_system,
)
from app.services.diagram_generator_service import random_gauss_diagram, random_knot, random_pd
from app.services.diagram_service import disjoint_union, mirror_switch, rotate_circle
from app.services.double_cover_service import check_arc_alternation, double_cover, lk_n
from app.services.gauss_code_service import emit_gauss_code, format_gauss_code
from app.services.invariant_service import f_polynomial, kauffman_bracket, odd_writhe
from app.services.move_service import k_flype, random_walk
from app.services.pd_code_service import pd_to_gauss
from app.utils.logger_util import get_logger

logger = get_logger("verify")

SEED_STRIDE = 1_000_003
WALK_STEPS = 12
PATH_MOVES = 6
PATH_CAP = 2
COVER_F_CHORDS = 16
COVER_F_BASE_CHORDS = 6
PD_CLASSICAL = 6
PD_VIRTUAL = 4


@dataclass(frozen=True)
class SuiteLimits:
    """Size limits shared by every trial of a run."""

    max_chords: int
    state_limit: int
    cut_points: int
    walk_weights: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class TrialFailure:
    """What went wrong in one trial, with the data to reproduce it."""

    detail: str
    diagrams: tuple[GaussDiagram, ...] = ()
    cuts: tuple[CutSystem, ...] = ()


@dataclass(frozen=True)
class TrialSkip:
    """A trial whose check could not run within the configured limits."""

    reason: str


TrialCheck = Callable[[random.Random, SuiteLimits], TrialFailure | TrialSkip | None]


def _cover_f(diagram: GaussDiagram, cuts: CutSystem, limits: SuiteLimits) -> LaurentPolynomial:
    return f_polynomial(double_cover(diagram, cuts).diagram, limits.state_limit)


def check_lkn_equals_odd_writhe(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """The linking number of the cover equals the odd writhe."""
    diagram = random_knot(rng, limits.max_chords)
    cuts = random_cut_system(diagram, rng, limits.cut_points)
    linking, odd = lk_n(diagram, cuts), odd_writhe(diagram)
    if linking != odd:
        return TrialFailure(f"lk_N {linking} != odd writhe {odd}", (diagram,), (cuts,))
    return None


def _walk_pair(
    rng: random.Random,
    limits: SuiteLimits,
    base_chords: int,
    walk_chords: int,
) -> tuple[GaussDiagram, GaussDiagram]:
    diagram = random_knot(rng, base_chords)
    walked, _ = random_walk(
        diagram,
        rng.randint(0, WALK_STEPS),
        rng.randrange(2**31),
        allow_flype=True,
        max_chords=max(walk_chords, diagram.chord_count),
        weights=limits.walk_weights or None,
    )
    return diagram, walked


def check_cover_invariance(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """Equivalent knots with independent cut systems and start points have covers with equal lk_N."""
    diagram, walked = _walk_pair(rng, limits, limits.max_chords, limits.max_chords)
    cuts = random_cut_system(diagram, rng, limits.cut_points)
    walked, walked_cuts = rotate_circle(
        walked,
        random_cut_system(walked, rng, limits.cut_points),
        0,
        rng.randrange(max(1, 2 * walked.chord_count)),
    )
    before, after = lk_n(diagram, cuts), lk_n(walked, walked_cuts)
    if before != after:
        return TrialFailure(f"lk_N {before} != {after} after the walk", (diagram, walked), (cuts, walked_cuts))
    return None


def check_cover_f(rng: random.Random, limits: SuiteLimits) -> TrialFailure | TrialSkip | None:
    """Equivalent knots with independent cut systems have covers with equal f.

    Base diagrams keep at most six chords and walks at most half the cover bound;
    pairs whose covers still exceed the state limit are skipped.
    """
    diagram, walked = _walk_pair(
        rng,
        limits,
        min(limits.max_chords, COVER_F_BASE_CHORDS),
        COVER_F_CHORDS // 2,
    )
    cover_chords = 2 * max(diagram.chord_count, walked.chord_count)
    if cover_chords > limits.state_limit:
        return TrialSkip(f"covers of {cover_chords} chords exceed the state limit {limits.state_limit}")
    cuts = random_cut_system(diagram, rng, limits.cut_points)
    walked_cuts = random_cut_system(walked, rng, limits.cut_points)
    f_before, f_after = _cover_f(diagram, cuts, limits), _cover_f(walked, walked_cuts, limits)
    if f_before != f_after:
        return TrialFailure(f"cover f {f_before} != {f_after}", (diagram, walked), (cuts, walked_cuts))
    return None



def check_cut_path(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """A cut system reached by k random cut point moves is found again within depth k."""
    diagram = random_knot(rng, limits.max_chords)
    start = random_cut_system(diagram, rng, limits.cut_points)
    cap = max(PATH_CAP, start.max_count)
    goal = start
    moves = rng.randint(0, PATH_MOVES)
    for _ in range(moves):
        goal = rng.choice(neighbors(diagram, goal, cap))[1]
    path = find_move_path(diagram, start, goal, moves, cap)
    if path is None:
        return TrialFailure(f"no path within depth {moves}", (diagram,), (start, goal))
    reached = start
    for move in path:
        reached = apply_cut_move(diagram, reached, move)
    if reached != goal or len(path) > moves:
        return TrialFailure(f"path of {len(path)} moves does not lead to the goal", (diagram,), (start, goal))
    return None


def check_even(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """Cut systems have an even number of points."""
    diagram = random_gauss_diagram(rng, rng.randint(0, limits.max_chords), rng.randint(1, 2))
    if rng.random() < 0.5:  # noqa: PLR2004
        cuts = random_cut_system(diagram, rng, limits.cut_points)
    else:
        cuts = CutSystem({gap: rng.randint(0, 2) for gap in diagram.gaps()})
    if is_cut_system(diagram, cuts) and cuts.total % 2:
        return TrialFailure(f"cut system with {cuts.total} points", (diagram,), (cuts,))
    return None


def check_cover_normal(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """Covers are normal; covers of knots have two circles with alternating arcs."""
    diagram = random_gauss_diagram(rng, rng.randint(0, limits.max_chords), rng.randint(1, 2))
    cuts = random_cut_system(diagram, rng, limits.cut_points)
    cover = double_cover(diagram, cuts)
    if not is_normal(cover.diagram):
        return TrialFailure("cover is not normal", (diagram,), (cuts,))
    if diagram.is_knot and cover.diagram.circle_count != 2:  # noqa: PLR2004
        return TrialFailure(f"knot cover has {cover.diagram.circle_count} circles", (diagram,), (cuts,))
    if not check_arc_alternation(cover):
        return TrialFailure("arcs do not alternate between cover circles", (diagram,), (cuts,))
    return None


def check_normal_zero(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """Normal knots have lk_N 0, and their cover without cut points is D plus D*."""
    diagram = pd_to_gauss(random_pd(rng, min(limits.max_chords, PD_CLASSICAL), 0, knot=True))
    empty = CutSystem.empty()
    if not is_normal(diagram):
        return TrialFailure("classical diagram is not normal", (diagram,))
    linking = lk_n(diagram, empty)
    if linking != 0 or odd_writhe(diagram) != 0:
        return TrialFailure(f"lk_N {linking}, odd writhe {odd_writhe(diagram)}", (diagram,), (empty,))
    starred, _ = mirror_switch(diagram, empty)
    if emit_gauss_code(double_cover(diagram, empty).diagram) != emit_gauss_code(disjoint_union(diagram, starred)):
        return TrialFailure("cover without cut points is not D plus D*", (diagram,), (empty,))
    return None


def check_flype_f(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """A K-flype keeps the f-polynomial, the odd writhe and lk_N."""
    diagram = random_knot(rng, limits.max_chords, min_chords=1)
    chord = rng.choice(diagram.chord_ids)
    flyped = k_flype(diagram, chord)
    if f_polynomial(diagram, limits.state_limit) != f_polynomial(flyped, limits.state_limit):
        return TrialFailure(f"f changes under the flype of chord {chord}", (diagram, flyped))
    if odd_writhe(diagram) != odd_writhe(flyped):
        return TrialFailure(f"odd writhe changes under the flype of chord {chord}", (diagram, flyped))
    cuts = random_cut_system(diagram, rng, limits.cut_points)
    flyped_cuts = random_cut_system(flyped, rng, limits.cut_points)
    if lk_n(diagram, cuts) != lk_n(flyped, flyped_cuts):
        return TrialFailure(f"lk_N changes under the flype of chord {chord}", (diagram, flyped), (cuts, flyped_cuts))
    return None


def traced_bracket(diagram: GaussDiagram) -> LaurentPolynomial:
    """Kauffman bracket by walking every loop of every state.

    Each arc has a start and an end; a smoothing joins arc ends at each chord and
    the loops are followed by alternating between the arc itself and the smoothing.
    """
    arcs = [(c, p) for c, circle in enumerate(diagram.circles) for p in range(len(circle))]
    empty = sum(1 for circle in diagram.circles if not circle)

    def arriving(c: int, p: int) -> tuple[str, tuple[int, int]]:
        return ("end", (c, (p - 1) % len(diagram.circles[c])))

    total = LaurentPolynomial.zero()
    chords = diagram.chords
    for state in product((True, False), repeat=len(chords)):
        glue: dict[tuple[str, tuple[int, int]], tuple[str, tuple[int, int]]] = {}
        for use_a, chord in zip(state, chords, strict=True):
            oriented = use_a == (chord.sign is Sign.POSITIVE)
            x, y = chord.tail, chord.head
            if oriented:
                joins = [(arriving(*x), ("start", tuple(y))), (arriving(*y), ("start", tuple(x)))]
            else:
                joins = [(arriving(*x), arriving(*y)), (("start", tuple(x)), ("start", tuple(y)))]
            for one, other in joins:
                glue[one] = other
                glue[other] = one
        seen: set[tuple[int, int]] = set()
        loops = empty
        for arc in arcs:
            if arc in seen:
                continue
            loops += 1
            end = ("start", arc)
            while True:
                seen.add(end[1])
                far = ("end" if end[0] == "start" else "start", end[1])
                end = glue[far]
                if end[1] in seen:
                    break
        a_count = sum(state)
        total += A ** (2 * a_count - len(chords)) * LOOP_VALUE ** (loops - 1)
    return total


def check_bracket_oracle(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """The union-find state sum agrees with the loop tracer."""
    diagram = random_gauss_diagram(rng, rng.randint(0, min(limits.max_chords, 6)), rng.randint(1, 2))
    fast, traced = kauffman_bracket(diagram, limits.state_limit), traced_bracket(diagram)
    if fast != traced:
        return TrialFailure(f"bracket {fast} != traced {traced}", (diagram,))
    return None


def check_condition_star_oracle(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """The single-circle parity criterion agrees with the 2-colouring solver."""
    diagram = random_knot(rng, limits.max_chords)
    counts: dict = {}
    for _ in range(rng.randint(0, limits.cut_points)):
        gap = rng.choice(diagram.gaps())
        counts[gap] = counts.get(gap, 0) + 1
    cuts = CutSystem(counts)
    if condition_star(diagram, cuts) != is_cut_system(diagram, cuts):
        return TrialFailure("parity criterion and solver disagree", (diagram,), (cuts,))
    return None


def check_canonical_cut(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
    """Canonical cut systems are cut systems with two points per virtual crossing."""
    pd = random_pd(rng, min(limits.max_chords, PD_CLASSICAL), PD_VIRTUAL)
    diagram, cuts = canonical_cut_system(pd)
    if cuts.total != 2 * len(pd.virtual):
        return TrialFailure(f"{cuts.total} points for {len(pd.virtual)} virtual crossings", (diagram,), (cuts,))
    return None


SUITES: dict[str, TrialCheck] = {
    "thm-lkN-equals-odd-writhe": check_lkn_equals_odd_writhe,
    "thm-cover-invariance": check_cover_invariance,
    "thm-cover-f": check_cover_f,
    "thm-cutpath": check_cut_path,
    "cor-even": check_even,
    "prop-cover-normal": check_cover_normal,
    "cor-normal-zero": check_normal_zero,
    "remark-flype-f": check_flype_f,
    "oracle-bracket": check_bracket_oracle,
    "oracle-condition-star": check_condition_star_oracle,
    "canonical-cut": check_canonical_cut,
}


def trial_seed(seed: int, trial: int) -> int:
    """Seed of one trial."""
    return seed * SEED_STRIDE + trial


def run_trial(suite: str, trial: int, seed: int, limits: SuiteLimits) -> VerificationFailure | TrialSkip | None:
    """Run one trial; exceptions count as failures and skips are passed through."""
    rng = random.Random(trial_seed(seed, trial))  # noqa: S311
    try:
        failure = SUITES[suite](rng, limits)
    except Exception as e:  # noqa: BLE001
        failure = TrialFailure(f"{type(e).__name__}: {e}")
    if failure is None or isinstance(failure, TrialSkip):
        return failure
    return VerificationFailure(
        trial=trial,
        seed=trial_seed(seed, trial),
        codes=[format_gauss_code(d) for d in failure.diagrams],
        cuts=[[[g.circle, g.index, n] for g, n in c.counts] for c in failure.cuts],
        detail=failure.detail,
    )


class VerificationService:
    """Service class for running verification suites.

    Example:
        verification_service = VerificationService(settings=settings)
        report = verification_service.run_suite("cor-even", trials=100, seed=0, max_chords=6)

    """

    def __init__(self, settings: Settings) -> None:
        """Initialize the VerificationService.

        Args:
            settings (Settings): Limits, worker count and walk weights.

        """
        self.settings = settings

    @staticmethod
    def suite_names() -> list[str]:
        """Registered suite names, in registration order."""
        return list(SUITES)

    def run_suite(
        self,
        name: str,
        trials: int,
        seed: int,
        max_chords: int,
        *,
        timing: bool = False,
    ) -> VerificationReport:
        """Run a suite.

        Args:
            name (str): Suite name.
            trials (int): Number of trials, at least 1.
            seed (int): Base seed.
            max_chords (int): Largest chord count of the random diagrams.
            timing (bool): Add the elapsed time to the report.

        Returns:
            VerificationReport: Failures in trial order; identical for identical arguments.

        Raises:
            UnknownSuiteError: If the suite is not registered.
            ValueError: If ``trials`` is below 1.

        """
        if name not in SUITES:
            raise UnknownSuiteError(name)
        if trials < 1:
            msg = f"trials must be at least 1, got {trials}"
            raise ValueError(msg)
        limits = SuiteLimits(
            max_chords=max_chords,
            state_limit=self.settings.state_limit,
            cut_points=self.settings.random_cut_points,
            walk_weights=dict(self.settings.walk_weights),
        )
        started = time.perf_counter()
        indices = range(trials)
        if self.settings.workers > 1:
            with ProcessPoolExecutor(max_workers=self.settings.workers) as pool:
                outcomes = list(
                    pool.map(run_trial, [name] * trials, indices, [seed] * trials, [limits] * trials),
                )
        else:
            outcomes = [run_trial(name, trial, seed, limits) for trial in indices]
        failures = [outcome for outcome in outcomes if isinstance(outcome, VerificationFailure)]
        skipped = sum(isinstance(outcome, TrialSkip) for outcome in outcomes)
        elapsed = time.perf_counter() - started
        logger.info(
            "suite %s: %d trials, %d failures, %d skipped, %.2fs", name, trials, len(failures), skipped, elapsed,
        )
        return VerificationReport(
            suite=name,
            seed=seed,
            trials=trials,
            max_chords=max_chords,
            failures=failures,
            skipped=skipped,
            passed=not failures,
            elapsed=round(elapsed, 3) if timing else None,
        )
