"""Domain models of the toolkit.

Every model is immutable after construction and safe to share between workers.
"""

from app.models.cover_model import ArcLabel, ChordProvenance, CoverResult, CoverSource
from app.models.cut_system_model import AlternateOrientation, CutMove, CutMoveKind, CutSystem, Direction, SubArc
from app.models.diagram_input_model import DiagramInput, InputFormat, TableEntry
from app.models.gauss_diagram_model import Chord, EndpointRef, Gap, GaussDiagram, Marker, Sign
from app.models.laurent_polynomial_model import LaurentPolynomial
from app.models.move_model import ArrowDirection, MoveKind, MoveStep, MoveTrace, R2Variant, R3Variant
from app.models.pd_diagram_model import ClassicalCrossing, PDDiagram, VirtualCrossing

__all__ = [
    "AlternateOrientation",
    "ArcLabel",
    "ArrowDirection",
    "Chord",
    "ChordProvenance",
    "ClassicalCrossing",
    "CoverResult",
    "CoverSource",
    "CutMove",
    "CutMoveKind",
    "CutSystem",
    "DiagramInput",
    "Direction",
    "EndpointRef",
    "Gap",
    "GaussDiagram",
    "InputFormat",
    "LaurentPolynomial",
    "Marker",
    "MoveKind",
    "MoveStep",
    "MoveTrace",
    "PDDiagram",
    "R2Variant",
    "R3Variant",
    "Sign",
    "SubArc",
    "TableEntry",
    "VirtualCrossing",
]
