"""Result of the cut-system double covering."""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum
from typing import NamedTuple

from app.models.gauss_diagram_model import GaussDiagram


class CoverSource(StrEnum):
    """Which copy a cover chord comes from: the diagram itself or its mirror-switch."""

    BASE = "base"
    STAR = "star"


class ChordProvenance(NamedTuple):
    """Origin of a cover chord."""

    source: CoverSource
    original: int


class ArcLabel(NamedTuple):
    """Label of an arc between consecutive cut points of one circle.

    ``index`` is 1-based: arc ``i`` runs from point ``p_i`` to ``p_{i+1}`` on ``circle``.
    Circles without cut points give the single label with ``index`` 0.
    """

    circle: int
    index: int
    star: bool

    def __str__(self) -> str:
        """Render as ``A1`` / ``A1*`` (prefixed with the circle for links)."""
        return f"c{self.circle}:A{self.index}{'*' if self.star else ''}"


@dataclass(frozen=True)
class CoverResult:
    """The converted normal diagram together with its bookkeeping.

    Args:
        diagram: The cover, a Gauss diagram without cut points.
        provenance: Cover chord id to its source copy and original chord id.
        arc_map: Per cover circle, the arc labels it is made of, in order.

    """

    diagram: GaussDiagram
    provenance: Mapping[int, ChordProvenance]
    arc_map: tuple[tuple[ArcLabel, ...], ...]

    def component_of(self, label: ArcLabel) -> int:
        """Index of the cover circle that contains an arc label."""
        for index, labels in enumerate(self.arc_map):
            if label in labels:
                return index
        msg = f"unknown arc {label}"
        raise KeyError(msg)
