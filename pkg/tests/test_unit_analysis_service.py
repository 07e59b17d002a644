"""Unit tests for the analysis service."""
import json
from pathlib import Path

import pytest

from app.config.environment import Settings
from app.exceptions.cut_system_exception import InvalidCutSystemError
from app.models.cover_model import CoverSource
from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import Gap
from app.repositories.diagram_file_repository_impl import DiagramFileRepository
from app.services.analysis_service import AnalysisService
from tests.util_diagram_fixtures import TREFOIL, VIRTUAL_HOPF, VIRTUAL_TREFOIL, VIRTUAL_TREFOIL_PD

VIRTUAL_TREFOIL_F = [[-4, 1], [-6, 1], [-10, -1]]


@pytest.fixture
def settings() -> Settings:
    """Create settings with a single worker."""
    return Settings(workers=1, state_limit=20, cut_search_per_gap=2, cut_search_factor=2)


@pytest.fixture
def analysis_service(settings: Settings) -> AnalysisService:
    """Create an analysis service reading from the file system."""
    return AnalysisService(diagram_repository=DiagramFileRepository(), settings=settings)


def write(path: Path, text: str) -> Path:
    """Write a file and return its path."""
    path.write_text(text, encoding="utf-8")
    return path


class TestResolveCuts:
    """Unit tests for cut system resolution."""

    def test_pd_input_uses_canonical_system(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that PD input gets two points per virtual crossing."""
        loaded = analysis_service.load(write(tmp_path / "vt.pd", VIRTUAL_TREFOIL_PD))

        assert analysis_service.resolve_cuts(loaded) == CutSystem({Gap(0, 1): 1, Gap(0, 3): 1})

    def test_gauss_input_uses_search(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that Gauss input gets the smallest searched system."""
        loaded = analysis_service.load(write(tmp_path / "vt.gauss", VIRTUAL_TREFOIL))

        assert analysis_service.resolve_cuts(loaded, None) == CutSystem({Gap(0, 0): 1, Gap(0, 2): 1})

    def test_json_input_uses_stored_system(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that a stored cut system wins over the search."""
        document = {"circles": [["O1", "O2", "U1", "U2"]], "signs": {"1": "+", "2": "+"}, "cuts": [[0, 1, 3]]}
        loaded = analysis_service.load(write(tmp_path / "vt.json", json.dumps(document)))

        assert analysis_service.resolve_cuts(loaded) == CutSystem({Gap(0, 1): 3})

    def test_cut_file(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that a path reads the cut system from a file."""
        loaded = analysis_service.load(write(tmp_path / "vt.gauss", VIRTUAL_TREFOIL))
        cuts = write(tmp_path / "cuts.json", "[[0, 1, 1], [0, 3, 1]]")

        assert analysis_service.resolve_cuts(loaded, str(cuts)).total == 2


class TestInvariants:
    """Unit tests for the invariants report."""

    def test_virtual_trefoil(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test the full report of the virtual trefoil."""
        loaded = analysis_service.load(write(tmp_path / "vt.pd", VIRTUAL_TREFOIL_PD))

        report = analysis_service.invariants(loaded)

        assert report.model_dump(by_alias=True) == {
            "writhe": 2,
            "oddWrithe": 2,
            "normal": False,
            "lkN": 2,
            "amphicheiralObstructed": True,
            "f": VIRTUAL_TREFOIL_F,
        }

    def test_link_has_no_knot_fields(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that links report no odd writhe and no lk_N."""
        loaded = analysis_service.load(write(tmp_path / "hopf.gauss", VIRTUAL_HOPF))

        report = analysis_service.invariants(loaded)

        assert report.odd_writhe is None
        assert report.lk_n is None
        assert report.amphicheiral_obstructed is None
        assert report.writhe == 1

    def test_classical_knot_is_not_obstructed(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that a knot with lk_N zero carries no amphicheirality obstruction."""
        loaded = analysis_service.load(write(tmp_path / "trefoil.gauss", TREFOIL))

        report = analysis_service.invariants(loaded)

        assert report.lk_n == 0
        assert report.amphicheiral_obstructed is False

    def test_bad_cut_file_should_raise_error(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that a given system must be a cut system."""
        loaded = analysis_service.load(write(tmp_path / "vt.gauss", VIRTUAL_TREFOIL))
        cuts = write(tmp_path / "cuts.json", "[]")

        with pytest.raises(InvalidCutSystemError):
            analysis_service.invariants(loaded, str(cuts))


class TestCover:
    """Unit tests for the cover report."""

    def test_cover_report(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test components, linking number and provenance."""
        loaded = analysis_service.load(write(tmp_path / "vt.pd", VIRTUAL_TREFOIL_PD))

        report = AnalysisService.cover_report(analysis_service.cover(loaded))

        assert report.components == 2
        assert report.lk_n == 2
        assert [(c.id, c.source, c.orig) for c in report.chords] == [
            (1, CoverSource.BASE, 1),
            (2, CoverSource.BASE, 2),
            (3, CoverSource.STAR, 1),
            (4, CoverSource.STAR, 2),
        ]

    def test_link_cover_has_no_linking_number(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test that covers with more than two circles leave lk_N out."""
        loaded = analysis_service.load(write(tmp_path / "unlink.gauss", "()|()"))

        report = AnalysisService.cover_report(analysis_service.cover(loaded))

        assert report.components == 4
        assert report.lk_n is None


class TestIngest:
    """Unit tests for table ingestion."""

    def test_rows_and_csv(self, analysis_service: AnalysisService, tmp_path: Path) -> None:
        """Test one knot row and one link row."""
        table = write(tmp_path / "table.txt", f"vt {VIRTUAL_TREFOIL}\nhopf {VIRTUAL_HOPF}\n")
        entries = analysis_service.diagram_repository.load_table(table)

        rows = analysis_service.ingest(entries)

        assert rows[0].odd_writhe == 2
        assert rows[0].lk_n == 2
        assert rows[1].odd_writhe == ""
        csv_text = AnalysisService.to_csv(rows)
        lines = csv_text.splitlines()
        assert lines[0] == "name,oddWrithe,lkN,f,normal"
        assert lines[1] == "vt,2,2,A^-4 + A^-6 - A^-10,false"
        assert lines[2].startswith("hopf,,,")

    def test_state_limit_marker(self, tmp_path: Path) -> None:
        """Test that oversized diagrams get STATE_LIMIT instead of f."""
        service = AnalysisService(DiagramFileRepository(), Settings(workers=1, state_limit=2))
        entries = service.diagram_repository.load_table(write(tmp_path / "table.txt", f"3.1 {TREFOIL}\n"))

        rows = service.ingest(entries)

        assert rows[0].f == "STATE_LIMIT"
        assert rows[0].normal is True
        assert rows[0].lk_n == 0
