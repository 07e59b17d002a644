"""Unit tests for the file based diagram repository."""
import json
from pathlib import Path

import pytest

from app.exceptions.diagram_exception import GaussCodeSyntaxError
from app.exceptions.repository_exception import DiagramFileNotFoundError, DiagramFormatError
from app.models.cut_system_model import CutSystem
from app.models.diagram_input_model import InputFormat
from app.models.gauss_diagram_model import Gap
from app.models.move_model import MoveKind
from app.repositories.diagram_file_repository_impl import DiagramFileRepository
from app.services.gauss_code_service import format_gauss_code
from tests.util_diagram_fixtures import VIRTUAL_TREFOIL, VIRTUAL_TREFOIL_PD


@pytest.fixture
def repository() -> DiagramFileRepository:
    """Create a repository reading UTF-8 files."""
    return DiagramFileRepository()


class TestDiagramFileRepository:
    """Unit tests for DiagramFileRepository."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ('{"circles": [["O1", "U1"]]}', InputFormat.JSON),
            ("# header\nX+(4,1,5,2)\n", InputFormat.PD),
            ("V(1,2,2,1)", InputFormat.PD),
            ("O1+U1+", InputFormat.GAUSS),
            ("()", InputFormat.GAUSS),
        ],
    )
    def test_detect_format(self, text: str, expected: InputFormat) -> None:
        """Test that the format is guessed from the content."""
        assert DiagramFileRepository.detect_format(text) is expected

    def test_load_gauss(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test loading a Gauss code with a comment line."""
        path = tmp_path / "vt.gauss"
        path.write_text(f"# virtual trefoil\n{VIRTUAL_TREFOIL}\n", encoding="utf-8")

        loaded = repository.load_diagram(path)

        assert loaded.source_format is InputFormat.GAUSS
        assert format_gauss_code(loaded.diagram) == VIRTUAL_TREFOIL
        assert loaded.pd is None
        assert loaded.cuts is None

    def test_load_pd_keeps_records(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test that PD input keeps its records for the canonical cut system."""
        path = tmp_path / "vt.pd"
        path.write_text(VIRTUAL_TREFOIL_PD, encoding="utf-8")

        loaded = repository.load_diagram(path)

        assert loaded.source_format is InputFormat.PD
        assert loaded.pd is not None
        assert len(loaded.pd.virtual) == 1
        assert format_gauss_code(loaded.diagram) == VIRTUAL_TREFOIL

    def test_load_json_with_cuts(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test that a JSON document brings its cut system along."""
        path = tmp_path / "vt.json"
        document = {
            "circles": [["O1", "O2", "U1", "U2"]],
            "signs": {"1": "+", "2": "+"},
            "cuts": [[0, 1, 1], [0, 3, 1]],
        }
        path.write_text(json.dumps(document), encoding="utf-8")

        loaded = repository.load_diagram(path)

        assert format_gauss_code(loaded.diagram) == VIRTUAL_TREFOIL
        assert loaded.cuts == CutSystem({Gap(0, 1): 1, Gap(0, 3): 1})

    def test_load_invalid_json_document_should_raise_error(
        self,
        repository: DiagramFileRepository,
        tmp_path: Path,
    ) -> None:
        """Test that schema violations become format errors."""
        path = tmp_path / "bad.json"
        path.write_text('{"circles": [["Q1"]]}', encoding="utf-8")

        with pytest.raises(DiagramFormatError):
            repository.load_diagram(path)

    def test_load_bad_gauss_should_raise_error(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test that syntax errors of the code propagate."""
        path = tmp_path / "bad.gauss"
        path.write_text("O1+U2+", encoding="utf-8")

        with pytest.raises(GaussCodeSyntaxError):
            repository.load_diagram(path)

    def test_load_undecodable_bytes_should_raise_error(
        self,
        repository: DiagramFileRepository,
        tmp_path: Path,
    ) -> None:
        """Test that bytes outside the encoding are a format error, not a missing file."""
        path = tmp_path / "latin.gauss"
        path.write_bytes(b"O1+U1+ \xff\xfe")

        with pytest.raises(DiagramFormatError, match="not utf-8 text"):
            repository.load_diagram(path)

    def test_missing_file_should_raise_error(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test that unreadable files raise a not-found error."""
        with pytest.raises(DiagramFileNotFoundError):
            repository.load_diagram(tmp_path / "nowhere.gauss")

    def test_load_cut_system_shapes(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test both the bare list and the wrapped form."""
        bare = tmp_path / "bare.json"
        bare.write_text("[[0, 1, 1], [0, 3, 1]]", encoding="utf-8")
        wrapped = tmp_path / "wrapped.json"
        wrapped.write_text('{"cuts": [[0, 1, 1], [0, 3, 1]]}', encoding="utf-8")

        assert repository.load_cut_system(bare) == repository.load_cut_system(wrapped)
        assert repository.load_cut_system(bare).total == 2

    @pytest.mark.parametrize("text", ['{"points": []}', "[[0, 1]]", "[[0, 1, -1]]", "[0, 1"])
    def test_load_bad_cut_system_should_raise_error(
        self,
        repository: DiagramFileRepository,
        tmp_path: Path,
        text: str,
    ) -> None:
        """Test that malformed cut files become format errors."""
        path = tmp_path / "cuts.json"
        path.write_text(text, encoding="utf-8")

        with pytest.raises(DiagramFormatError):
            repository.load_cut_system(path)

    def test_load_trace(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test reading a wrapped move trace."""
        path = tmp_path / "trace.json"
        step = {"kind": "r1_insert", "params": {"gap": [0, 0], "sign": "+", "arrow": "O-first"}}
        path.write_text(json.dumps({"code": "O1+U1+", "trace": {"seed": 4, "steps": [step]}}), encoding="utf-8")

        trace = repository.load_trace(path)

        assert trace.seed == 4
        assert trace.steps[0].kind is MoveKind.R1_INSERT

    def test_load_table(self, repository: DiagramFileRepository, tmp_path: Path) -> None:
        """Test named and unnamed table entries."""
        path = tmp_path / "table.txt"
        path.write_text(f"# small table\n2.1: {VIRTUAL_TREFOIL}\n\nO1+U1+\n3.1 O1+U2+O3+U1+O2+U3+\n", encoding="utf-8")

        entries = repository.load_table(path)

        assert [entry.name for entry in entries] == ["2.1", "K2", "3.1"]
        assert entries[0].code == VIRTUAL_TREFOIL
        assert entries[2].diagram.chord_count == 3
