"""Unit tests for the verification suites."""
import random

import pytest

from app.config.environment import Settings
from app.exceptions.verification_exception import UnknownSuiteError
from app.services.diagram_generator_service import random_gauss_diagram
from app.services.invariant_service import kauffman_bracket
from app.services.verification_service import (
    SUITES,
    SuiteLimits,
    TrialFailure,
    TrialSkip,
    VerificationService,
    run_trial,
    traced_bracket,
    trial_seed,
)
from tests.util_diagram_fixtures import TREFOIL, diagram

LIMITS = SuiteLimits(max_chords=4, state_limit=20, cut_points=4, walk_weights={"r1": 1, "r2": 1, "r3": 1})


@pytest.fixture
def verification_service() -> VerificationService:
    """Create a single-worker verification service."""
    return VerificationService(settings=Settings(workers=1, state_limit=20, random_cut_points=4))


class TestSuites:
    """Unit tests for the registered suites."""

    def test_suite_names(self) -> None:
        """Test that every suite is registered in order."""
        assert VerificationService.suite_names() == [
            "thm-lkN-equals-odd-writhe",
            "thm-cover-invariance",
            "thm-cover-f",
            "thm-cutpath",
            "cor-even",
            "prop-cover-normal",
            "cor-normal-zero",
            "remark-flype-f",
            "oracle-bracket",
            "oracle-condition-star",
            "canonical-cut",
        ]

    @pytest.mark.parametrize("name", list(SUITES))
    def test_suite_passes_on_small_diagrams(self, verification_service: VerificationService, name: str) -> None:
        """Test a few trials of every suite."""
        report = verification_service.run_suite(name, trials=4, seed=1, max_chords=4)

        assert report.failures == []
        assert report.passed
        assert report.trials == 4
        assert report.elapsed is None

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "name",
        ["thm-lkN-equals-odd-writhe", "thm-cover-invariance", "thm-cover-f", "thm-cutpath"],
    )
    def test_suite_passes_on_more_trials(self, verification_service: VerificationService, name: str) -> None:
        """Test the main theorems on more and larger diagrams."""
        assert verification_service.run_suite(name, trials=40, seed=7, max_chords=6).passed

    def test_cover_normal_on_links_at_full_size(self) -> None:
        """Test 100 knots and links with up to 8 chords and 6 cut points."""
        service = VerificationService(settings=Settings(workers=1, random_cut_points=6))

        report = service.run_suite("prop-cover-normal", trials=100, seed=0, max_chords=8)

        assert report.failures == []

    @pytest.mark.slow
    def test_cover_invariance_at_full_size(self) -> None:
        """Test 100 walked pairs with up to 8 chords."""
        service = VerificationService(settings=Settings(workers=1, random_cut_points=6))

        assert service.run_suite("thm-cover-invariance", trials=100, seed=0, max_chords=8).passed

    def test_cover_f_counts_skips(self) -> None:
        """Test that pairs too large for the state limit are counted as skipped, not passed over."""
        service = VerificationService(settings=Settings(workers=1, state_limit=4, random_cut_points=4))

        report = service.run_suite("thm-cover-f", trials=10, seed=2, max_chords=6)

        assert report.passed
        assert 0 < report.skipped <= 10
        assert report.model_dump(by_alias=True)["skipped"] == report.skipped

    def test_other_suites_skip_nothing(self, verification_service: VerificationService) -> None:
        """Test that suites without a size bound report no skips."""
        assert verification_service.run_suite("cor-even", trials=5, seed=0, max_chords=4).skipped == 0

    def test_report_is_deterministic(self, verification_service: VerificationService) -> None:
        """Test that identical arguments give identical reports."""
        first = verification_service.run_suite("cor-even", trials=5, seed=3, max_chords=4)

        assert verification_service.run_suite("cor-even", trials=5, seed=3, max_chords=4) == first

    def test_timing(self, verification_service: VerificationService) -> None:
        """Test that the elapsed time appears only on request."""
        report = verification_service.run_suite("canonical-cut", trials=1, seed=0, max_chords=3, timing=True)

        assert report.elapsed is not None

    def test_unknown_suite_should_raise_error(self, verification_service: VerificationService) -> None:
        """Test that unknown names are rejected."""
        with pytest.raises(UnknownSuiteError):
            verification_service.run_suite("thm-nothing", trials=1, seed=0, max_chords=3)

    def test_zero_trials_should_raise_error(self, verification_service: VerificationService) -> None:
        """Test that at least one trial is needed."""
        with pytest.raises(ValueError):
            verification_service.run_suite("cor-even", trials=0, seed=0, max_chords=3)


class TestRunTrial:
    """Unit tests for single trials and failure records."""

    def test_trial_seed(self) -> None:
        """Test the per-trial seed."""
        assert trial_seed(2, 5) == 2 * 1_000_003 + 5

    def test_exception_becomes_failure(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that a crashing check is reported, not raised."""

        def crash(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
            msg = "broken check"
            raise RuntimeError(msg)

        monkeypatch.setitem(SUITES, "crash", crash)

        failure = run_trial("crash", 3, 0, LIMITS)

        assert failure is not None
        assert failure.trial == 3
        assert failure.seed == 3
        assert failure.detail == "RuntimeError: broken check"

    def test_failure_carries_codes(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that failing diagrams are written as Gauss codes."""

        def fail(rng: random.Random, limits: SuiteLimits) -> TrialFailure | None:
            return TrialFailure("always", (diagram(TREFOIL),))

        monkeypatch.setitem(SUITES, "fail", fail)

        failure = run_trial("fail", 0, 1, LIMITS)

        assert failure is not None
        assert failure.codes == [TREFOIL]
        assert failure.cuts == []

    def test_skip_is_passed_through(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that a skipped trial is neither a failure nor a pass."""

        def skip(rng: random.Random, limits: SuiteLimits) -> TrialSkip:
            return TrialSkip("too large")

        monkeypatch.setitem(SUITES, "skip", skip)

        assert run_trial("skip", 0, 0, LIMITS) == TrialSkip("too large")


class TestTracedBracket:
    """Unit tests for the loop-walking bracket."""

    def test_agrees_with_state_sum(self) -> None:
        """Test the tracer against the union-find state sum on random diagrams."""
        rng = random.Random(12)
        for _ in range(15):
            d = random_gauss_diagram(rng, rng.randint(0, 5), rng.randint(1, 3))
            assert traced_bracket(d) == kauffman_bracket(d)
