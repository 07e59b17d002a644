"""Unit tests for PD code parsing and conversion."""
import pytest

from app.exceptions.diagram_exception import PDCodeSyntaxError
from app.models.gauss_diagram_model import Gap, Sign
from app.services.gauss_code_service import format_gauss_code
from app.services.pd_code_service import format_pd_code, parse_pd_code, pd_to_gauss, trace_pd
from tests.util_diagram_fixtures import HOPF_PD, TREFOIL, TREFOIL_PD, VIRTUAL_TREFOIL, VIRTUAL_TREFOIL_PD


class TestParsePdCode:
    """Unit tests for parse_pd_code."""

    def test_parse_records_and_comments(self) -> None:
        """Test that records are read and comments ignored."""
        pd = parse_pd_code("# virtual trefoil\nX+(4,1,5,2)\n\nX+(5,2,6,3)  # second\nV(3,6,4,1)\n")

        assert len(pd.classical) == 2
        assert len(pd.virtual) == 1
        assert pd.classical[0].sign is Sign.POSITIVE
        assert pd.edges == (1, 2, 3, 4, 5, 6)

    def test_malformed_line_should_raise_error(self) -> None:
        """Test that the failing line number is reported."""
        with pytest.raises(PDCodeSyntaxError) as exc_info:
            parse_pd_code("X+(2,1,3,4)\nY(1,2,3,4)")

        assert exc_info.value.line_number == 2

    def test_unclosed_edges_should_raise_error(self) -> None:
        """Test that edges must be used once incoming and once outgoing."""
        with pytest.raises(PDCodeSyntaxError) as exc_info:
            parse_pd_code("X+(1,2,3,4)")

        assert exc_info.value.line_number is None
        assert "appears 1 time(s)" in exc_info.value.reason

    def test_edge_used_twice_incoming_should_raise_error(self) -> None:
        """Test that an edge entering two crossings is rejected."""
        with pytest.raises(PDCodeSyntaxError, match="twice as incoming"):
            parse_pd_code("X+(1,2,3,4)\nX+(1,2,3,4)")

    def test_empty_input_should_raise_error(self) -> None:
        """Test that a diagram needs at least one record."""
        with pytest.raises(PDCodeSyntaxError, match="no crossings"):
            parse_pd_code("# nothing\n")

    def test_format_round_trip(self) -> None:
        """Test that formatting gives parseable records."""
        pd = parse_pd_code(VIRTUAL_TREFOIL_PD)

        assert format_pd_code(pd) == VIRTUAL_TREFOIL_PD
        assert parse_pd_code(format_pd_code(pd)) == pd


class TestPdToGauss:
    """Unit tests for the PD to Gauss conversion."""

    def test_virtual_trefoil(self) -> None:
        """Test that virtual crossings vanish from the Gauss code."""
        assert format_gauss_code(pd_to_gauss(parse_pd_code(VIRTUAL_TREFOIL_PD))) == VIRTUAL_TREFOIL

    def test_classical_trefoil(self) -> None:
        """Test the closure of a three-crossing braid."""
        assert format_gauss_code(pd_to_gauss(parse_pd_code(TREFOIL_PD))) == TREFOIL

    def test_hopf_link_has_two_circles(self) -> None:
        """Test that each component becomes one circle."""
        d = pd_to_gauss(parse_pd_code(HOPF_PD))

        assert format_gauss_code(d) == "O1+U2+|U1+O2+"

    def test_edge_gaps(self) -> None:
        """Test that every edge is placed in the gap it runs through."""
        trace = trace_pd(parse_pd_code(VIRTUAL_TREFOIL_PD))

        assert trace.edge_gaps == {
            1: Gap(0, 3),
            2: Gap(0, 0),
            3: Gap(0, 1),
            4: Gap(0, 1),
            5: Gap(0, 2),
            6: Gap(0, 3),
        }
