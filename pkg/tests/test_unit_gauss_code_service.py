"""Unit tests for Gauss code parsing, canonical forms and emission."""
import pytest

from app.exceptions.diagram_exception import GaussCodeSyntaxError
from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import Gap, GaussDiagram, Marker, Sign
from app.services.gauss_code_service import (
    canonicalize,
    emit_gauss_code,
    format_gauss_code,
    parse_gauss_code,
)
from tests.util_diagram_fixtures import TREFOIL, UNLINK, VIRTUAL_HOPF, VIRTUAL_TREFOIL


class TestParseGaussCode:
    """Unit tests for parse_gauss_code."""

    def test_parse_virtual_trefoil(self) -> None:
        """Test parsing a one-circle code."""
        d = parse_gauss_code(VIRTUAL_TREFOIL)

        assert d.circles == (
            (Marker(1, over=True), Marker(2, over=True), Marker(1, over=False), Marker(2, over=False)),
        )
        assert d.sign_map == {1: Sign.POSITIVE, 2: Sign.POSITIVE}

    def test_parse_link_with_whitespace(self) -> None:
        """Test that whitespace is allowed around tokens and separators."""
        d = parse_gauss_code(" O1- U2+ | U1- O2+ ")

        assert d.circle_count == 2
        assert d.sign_of(1) is Sign.NEGATIVE
        assert d.chord(2).tail.circle == 1

    def test_parse_empty_components(self) -> None:
        """Test that () stands for a circle without crossings."""
        d = parse_gauss_code(UNLINK)

        assert d.circles == ((), ())
        assert d.chord_count == 0

    def test_ids_are_kept_as_written(self) -> None:
        """Test that parsing does not renumber chords."""
        assert parse_gauss_code("O7+U7+").chord_ids == (7,)

    @pytest.mark.parametrize(
        ("code", "reason"),
        [
            ("O1+U1-", "sign mismatch"),
            ("O1+O1+", "twice as O"),
            ("O1+", "only once"),
            ("O1+U1+U1+", "more than twice"),
            ("O1+U1+X", "unexpected character"),
            ("O1+U1+|", "empty component"),
            ("()O1+U1+", "only token"),
        ],
    )
    def test_invalid_code_should_raise_error(self, code: str, reason: str) -> None:
        """Test that malformed codes raise with a readable reason."""
        with pytest.raises(GaussCodeSyntaxError) as exc_info:
            parse_gauss_code(code)

        assert reason in exc_info.value.reason

    def test_error_position(self) -> None:
        """Test that the error points at the offending character."""
        with pytest.raises(GaussCodeSyntaxError) as exc_info:
            parse_gauss_code("O1+U1+X")

        assert exc_info.value.position == 6


class TestEmitGaussCode:
    """Unit tests for canonical emission."""

    def test_format_keeps_layout(self) -> None:
        """Test that format_gauss_code renders the diagram as written."""
        assert format_gauss_code(parse_gauss_code("U3-O3-")) == "U3-O3-"

    @pytest.mark.parametrize("code", [TREFOIL, VIRTUAL_TREFOIL, VIRTUAL_HOPF, UNLINK, "()"])
    def test_canonical_codes_are_fixed_points(self, code: str) -> None:
        """Test that canonical codes emit themselves."""
        assert emit_gauss_code(parse_gauss_code(code)) == code

    def test_rotation_and_renumbering_do_not_matter(self) -> None:
        """Test that rotated and renumbered codes share a canonical form."""
        assert emit_gauss_code(parse_gauss_code("U5+U3+O5+O3+")) == VIRTUAL_TREFOIL
        assert emit_gauss_code(parse_gauss_code("U3-|O3-")) == "O1-|U1-"

    def test_emit_parse_fixed_point(self) -> None:
        """Test that parsing the emitted code gives the canonical diagram."""
        d = parse_gauss_code("O4+U9-O9-U4+")

        emitted = emit_gauss_code(d)

        assert emit_gauss_code(parse_gauss_code(emitted)) == emitted

    def test_canonicalize_carries_cuts(self) -> None:
        """Test that cut points follow their gaps through the rotation."""
        d = GaussDiagram(
            circles=[[(1, False), (2, False), (1, True), (2, True)]],
            signs={1: 1, 2: 1},
        )
        cuts = CutSystem({Gap(0, 3): 1, Gap(0, 1): 1})

        canonical, moved = canonicalize(d, cuts)

        assert format_gauss_code(canonical) == VIRTUAL_TREFOIL
        assert moved == CutSystem({Gap(0, 1): 1, Gap(0, 3): 1})
