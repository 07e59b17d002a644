"""Unit tests for writhe, odd writhe, Kauffman bracket and f-polynomial."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.exceptions.diagram_exception import NotAKnotError
from app.exceptions.invariant_exception import StateLimitExceededError
from app.models.laurent_polynomial_model import A, LaurentPolynomial
from app.services.diagram_generator_service import random_gauss_diagram
from app.services.diagram_service import mirror, switch_all
from app.services.invariant_service import (
    f_polynomial,
    kauffman_bracket,
    odd_chords,
    odd_writhe,
    state_loop_counts,
    writhe,
)
from tests.util_diagram_fixtures import (
    FIGURE_EIGHT,
    KINK,
    TREFOIL,
    UNLINK,
    VIRTUAL_HOPF,
    VIRTUAL_TREFOIL,
    diagram,
    same_polynomial,
    sympy_bracket,
)


class TestOddWrithe:
    """Unit tests for odd chords, odd writhe and writhe."""

    def test_virtual_trefoil(self) -> None:
        """Test that both chords of the virtual trefoil are odd."""
        d = diagram(VIRTUAL_TREFOIL)

        assert odd_chords(d) == {1, 2}
        assert odd_writhe(d) == 2
        assert writhe(d) == 2

    @pytest.mark.parametrize("code", [KINK, TREFOIL, FIGURE_EIGHT, "()"])
    def test_classical_knots_have_no_odd_chords(self, code: str) -> None:
        """Test that classical diagrams have zero odd writhe."""
        assert odd_writhe(diagram(code)) == 0

    def test_writhe_of_figure_eight(self) -> None:
        """Test that the signs of the figure-eight cancel."""
        assert writhe(diagram(FIGURE_EIGHT)) == 0

    def test_link_should_raise_error(self) -> None:
        """Test that odd chords are defined for knots only."""
        with pytest.raises(NotAKnotError):
            odd_writhe(diagram(VIRTUAL_HOPF))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_switch_and_mirror_negate(self, seed: int) -> None:
        """Test that switching every crossing or mirroring negates the odd writhe."""
        rng = random.Random(seed)
        d = random_gauss_diagram(rng, rng.randint(0, 8))

        assert odd_writhe(switch_all(d)) == -odd_writhe(d)
        assert odd_writhe(mirror(d)) == -odd_writhe(d)


class TestKauffmanBracket:
    """Unit tests for the bracket and the f-polynomial."""

    def test_unknot_and_unlink(self) -> None:
        """Test the normalization <O> = 1 and the loop value of a split circle."""
        assert kauffman_bracket(diagram("()")) == LaurentPolynomial.one()
        assert kauffman_bracket(diagram(UNLINK)) == LaurentPolynomial({2: -1, -2: -1})

    def test_kink(self) -> None:
        """Test that a positive kink evaluates to -A^3 and its f-polynomial to 1."""
        assert kauffman_bracket(diagram(KINK)) == -(A**3)
        assert f_polynomial(diagram(KINK)) == LaurentPolynomial.one()

    def test_trefoil(self) -> None:
        """Test the bracket and f-polynomial of the positive trefoil."""
        d = diagram(TREFOIL)

        assert kauffman_bracket(d) == LaurentPolynomial({5: -1, -3: -1, -7: 1})
        assert f_polynomial(d) == LaurentPolynomial({-4: 1, -12: 1, -16: -1})

    def test_virtual_trefoil(self) -> None:
        """Test the f-polynomial of the virtual trefoil."""
        assert f_polynomial(diagram(VIRTUAL_TREFOIL)) == LaurentPolynomial({-4: 1, -6: 1, -10: -1})

    def test_mirror_inverts_variable(self) -> None:
        """Test that mirroring substitutes A -> A^-1."""
        d = diagram(VIRTUAL_TREFOIL)

        assert f_polynomial(mirror(d)) == f_polynomial(d).invert_variable()

    def test_state_histogram(self) -> None:
        """Test the (a - b, loops) histogram of the virtual trefoil."""
        assert state_loop_counts(diagram(VIRTUAL_TREFOIL)) == {(2, 1): 1, (0, 1): 2, (-2, 2): 1}

    def test_state_limit_should_raise_error(self) -> None:
        """Test that large diagrams are refused."""
        with pytest.raises(StateLimitExceededError):
            kauffman_bracket(diagram(TREFOIL), state_limit=2)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=2))
    def test_matches_sympy_state_sum(self, seed: int, circles: int) -> None:
        """Test the bracket against an independent state sum."""
        rng = random.Random(seed)
        d = random_gauss_diagram(rng, rng.randint(0, 5), circles)

        assert same_polynomial(kauffman_bracket(d), sympy_bracket(d))
