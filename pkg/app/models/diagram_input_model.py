"""Diagrams as read from disk, before any command runs on them."""

from dataclasses import dataclass
from enum import StrEnum

from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import GaussDiagram
from app.models.pd_diagram_model import PDDiagram


class InputFormat(StrEnum):
    """Detected format of a diagram file."""

    GAUSS = "gauss"
    PD = "pd"
    JSON = "json"


@dataclass(frozen=True)
class DiagramInput:
    """A loaded diagram.

    Args:
        diagram: The Gauss diagram.
        source_format: The detected input format.
        pd: The PD code when the input was PD (needed for canonical cut systems).
        cuts: The cut system stored alongside a JSON diagram, if any.

    """

    diagram: GaussDiagram
    source_format: InputFormat
    pd: PDDiagram | None = None
    cuts: CutSystem | None = None


@dataclass(frozen=True)
class TableEntry:
    """One named diagram of a knot table."""

    name: str
    code: str
    diagram: GaussDiagram
