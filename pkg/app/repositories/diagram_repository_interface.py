"""Diagram repository interface module.

This module defines the abstract interface for loading diagrams, cut systems,
move traces and knot tables, providing a contract for different storage backends.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from app.models.cut_system_model import CutSystem
from app.models.diagram_input_model import DiagramInput, TableEntry
from app.models.move_model import MoveTrace


class DiagramRepositoryInterface(ABC):
    """Abstract base class defining the interface for diagram storage."""

    @abstractmethod
    def load_diagram(self, path: Path) -> DiagramInput:
        """Load a diagram stored as a Gauss code, a PD code or a diagram JSON document."""

    @abstractmethod
    def load_cut_system(self, path: Path) -> CutSystem:
        """Load a cut system stored as a JSON list of triples or a document with ``cuts``."""

    @abstractmethod
    def load_trace(self, path: Path) -> MoveTrace:
        """Load a move trace written by ``walk``."""

    @abstractmethod
    def load_table(self, path: Path) -> list[TableEntry]:
        """Load a knot table, one signed Gauss code per line."""
