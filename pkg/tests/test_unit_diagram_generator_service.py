"""Unit tests for the seeded diagram generators."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from app.services.cut_system_service import canonical_cut_system, is_cut_system
from app.services.diagram_generator_service import braid_closure, random_gauss_diagram, random_knot, random_pd
from app.services.diagram_service import validate
from app.services.gauss_code_service import emit_gauss_code
from app.services.pd_code_service import check_pd_diagram, parse_pd_code, pd_to_gauss
from tests.util_diagram_fixtures import HOPF_PD, TREFOIL_PD, VIRTUAL_TREFOIL


class TestRandomGaussDiagram:
    """Unit tests for random Gauss diagrams."""

    def test_same_seed_same_diagram(self) -> None:
        """Test that generation is reproducible."""
        assert random_gauss_diagram(random.Random(7), 4, 2) == random_gauss_diagram(random.Random(7), 4, 2)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=3))
    def test_diagrams_are_valid(self, seed: int, circles: int) -> None:
        """Test that every drawn diagram passes validation."""
        d = random_gauss_diagram(random.Random(seed), 5, circles)

        assert validate(d) == []
        assert d.circle_count == circles
        assert d.chord_count == 5

    def test_random_knot_bounds(self) -> None:
        """Test that knots stay within the chord range."""
        rng = random.Random(3)

        for _ in range(20):
            d = random_knot(rng, 6, min_chords=2)
            assert d.is_knot
            assert 2 <= d.chord_count <= 6


class TestBraidClosure:
    """Unit tests for braid closures."""

    def test_trefoil(self) -> None:
        """Test the closure of three positive generators."""
        assert braid_closure(2, [("s", 0, 1)] * 3) == parse_pd_code(TREFOIL_PD)

    def test_hopf_link(self) -> None:
        """Test the closure of two positive generators."""
        assert braid_closure(2, [("s", 0, 1)] * 2) == parse_pd_code(HOPF_PD)

    def test_virtual_trefoil(self) -> None:
        """Test that a virtual generator yields the virtual trefoil."""
        pd = braid_closure(2, [("s", 0, 1), ("s", 0, 1), ("v", 0, 0)])

        assert pd is not None
        assert emit_gauss_code(pd_to_gauss(pd)) == VIRTUAL_TREFOIL

    def test_empty_word(self) -> None:
        """Test that the empty word has no closure."""
        assert braid_closure(3, []) is None


class TestRandomPd:
    """Unit tests for random PD diagrams."""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_canonical_cut_system_is_valid(self, seed: int) -> None:
        """Test that every drawn PD diagram closes up and carries a canonical cut system."""
        pd = random_pd(random.Random(seed), 5, 3)

        check_pd_diagram(pd)
        d, cuts = canonical_cut_system(pd)
        assert is_cut_system(d, cuts)
        assert cuts.total == 2 * len(pd.virtual)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_knot_option(self, seed: int) -> None:
        """Test that knot=True gives one component."""
        pd = random_pd(random.Random(seed), 5, 3, knot=True)

        assert pd_to_gauss(pd).is_knot
