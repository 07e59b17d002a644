"""Analysis Service Module.

This module defines the AnalysisService class, which resolves cut systems for
loaded diagrams and builds the invariant, cover and table reports of the CLI.
"""

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from app.config.environment import Settings
from app.exceptions.invariant_exception import StateLimitExceededError
from app.models.cover_model import CoverResult
from app.models.cut_system_model import CutSystem
from app.models.diagram_input_model import DiagramInput, TableEntry
from app.repositories.diagram_repository_interface import DiagramRepositoryInterface
from app.schemas.report_schema import CoverChordEntry, CoverReport, IngestRow, InvariantsReport
from app.services.cut_system_service import canonical_cut_system, find_cut_system, is_normal
from app.services.double_cover_service import double_cover, is_amphicheiral_obstructed, linking_number, lk_n
from app.services.invariant_service import f_polynomial, odd_writhe, writhe
from app.utils.logger_util import get_logger

logger = get_logger("analysis")

AUTO_CUTS = "auto"
INGEST_FIELDS = ("name", "oddWrithe", "lkN", "f", "normal")


def _ingest_row(entry: TableEntry, per_gap: int, factor: int, state_limit: int) -> IngestRow:
    diagram = entry.diagram
    normal = is_normal(diagram)
    odd: int | str = ""
    linking: int | str = ""
    if diagram.is_knot:
        odd = odd_writhe(diagram)
        cuts = find_cut_system(diagram, per_gap, factor * diagram.chord_count)
        linking = lk_n(diagram, cuts)
    try:
        f = str(f_polynomial(diagram, state_limit))
    except StateLimitExceededError:
        f = "STATE_LIMIT"
    return IngestRow(name=entry.name, odd_writhe=odd, lk_n=linking, f=f, normal=normal)


class AnalysisService:
    """Service class for diagram reports.

    Example:
        analysis_service = AnalysisService(diagram_repository=repository, settings=settings)
        loaded = analysis_service.load(Path("trefoil.pd"))
        report = analysis_service.invariants(loaded, cuts="auto")

    """

    def __init__(self, diagram_repository: DiagramRepositoryInterface, settings: Settings) -> None:
        """Initialize the AnalysisService.

        Args:
            diagram_repository (DiagramRepositoryInterface): Where diagrams and cut systems are read from.
            settings (Settings): Search bounds, state limit and worker count.

        """
        self.diagram_repository = diagram_repository
        self.settings = settings

    def load(self, path: Path) -> DiagramInput:
        """Load a diagram file."""
        return self.diagram_repository.load_diagram(path)

    def resolve_cuts(self, loaded: DiagramInput, cuts: str | None = AUTO_CUTS) -> CutSystem:
        """Pick the cut system for a diagram.

        ``auto`` takes the cut system stored with a JSON diagram, else the canonical
        cut system of a PD input, else the smallest system of the bounded search.
        Anything else is a path to a cut system file.

        Args:
            loaded (DiagramInput): The loaded diagram.
            cuts (str | None): ``"auto"``, None (same as auto) or a file path.

        Returns:
            CutSystem: The chosen cut system; it is not checked here.

        Raises:
            CutSystemSearchError: If the search finds nothing within its bounds.
            DiagramFileNotFoundError: If a cut file cannot be read.

        """
        if cuts not in (None, AUTO_CUTS):
            return self.diagram_repository.load_cut_system(Path(cuts))
        if loaded.cuts is not None:
            return loaded.cuts
        if loaded.pd is not None:
            return canonical_cut_system(loaded.pd)[1]
        return find_cut_system(
            loaded.diagram,
            self.settings.cut_search_per_gap,
            self.settings.cut_search_factor * loaded.diagram.chord_count,
        )

    def invariants(self, loaded: DiagramInput, cuts: str | None = AUTO_CUTS) -> InvariantsReport:
        """Writhe, odd writhe, normality, lk_N and f of a diagram.

        The odd writhe, lk_N and the amphicheirality obstruction are reported for knots only.

        Raises:
            StateLimitExceededError: If the diagram is too large for the state sum.
            InvalidCutSystemError: If a given cut system is not a cut system.

        """
        diagram = loaded.diagram
        report = InvariantsReport(
            writhe=writhe(diagram),
            normal=is_normal(diagram),
            f=f_polynomial(diagram, self.settings.state_limit).to_json(),
        )
        if diagram.is_knot:
            report.odd_writhe = odd_writhe(diagram)
            resolved = self.resolve_cuts(loaded, cuts)
            report.lk_n = lk_n(diagram, resolved)
            report.amphicheiral_obstructed = is_amphicheiral_obstructed(diagram, resolved)
        return report

    def cover(self, loaded: DiagramInput, cuts: str | None = AUTO_CUTS) -> CoverResult:
        """Build the double cover with the resolved cut system.

        Raises:
            InvalidCutSystemError: If the cut system is not a cut system.

        """
        return double_cover(loaded.diagram, self.resolve_cuts(loaded, cuts))

    @staticmethod
    def cover_report(cover: CoverResult) -> CoverReport:
        """Component count, linking number (two components only) and chord provenance."""
        linking = None
        if cover.diagram.circle_count == 2:  # noqa: PLR2004
            value = linking_number(cover.diagram)
            linking = int(value) if value.denominator == 1 else str(value)
        return CoverReport(
            components=cover.diagram.circle_count,
            lk_n=linking,
            chords=[
                CoverChordEntry(id=chord_id, source=origin.source, orig=origin.original)
                for chord_id, origin in sorted(cover.provenance.items())
            ],
        )

    def ingest(self, entries: list[TableEntry]) -> list[IngestRow]:
        """Compute one CSV row per table entry, in table order.

        Knot rows get the odd writhe and lk_N from the smallest searched cut system;
        link rows leave both empty. ``f`` reads ``STATE_LIMIT`` for diagrams too large
        for the state sum.
        """
        args = (
            entries,
            [self.settings.cut_search_per_gap] * len(entries),
            [self.settings.cut_search_factor] * len(entries),
            [self.settings.state_limit] * len(entries),
        )
        if self.settings.workers > 1 and len(entries) > 1:
            with ProcessPoolExecutor(max_workers=self.settings.workers) as pool:
                rows = list(pool.map(_ingest_row, *args))
        else:
            rows = list(map(_ingest_row, *args))
        logger.info("ingested %d diagrams", len(rows))
        return rows

    @staticmethod
    def to_csv(rows: list[IngestRow]) -> str:
        """Render ingestion rows as CSV with the header ``name,oddWrithe,lkN,f,normal``."""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=INGEST_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            data = row.model_dump(by_alias=True)
            data["normal"] = str(data["normal"]).lower()
            writer.writerow(data)
        return buffer.getvalue()
