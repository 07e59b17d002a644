"""Diagram JSON document: circles of ``O<id>``/``U<id>`` markers, signs and cut counts."""

import re

from pydantic import BaseModel, Field, field_validator

from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import Gap, GaussDiagram, Marker, Sign

_MARKER = re.compile(r"^([OU])([1-9]\d*)$")


class DiagramDocument(BaseModel):
    """Schema of a stored diagram, optionally with a cut system.

    Args:
        circles (list[list[str]]): Markers per circle, e.g. ``["O1", "U1"]``.
        signs (dict[str, str]): Chord id to ``"+"`` or ``"-"``.
        cuts (list[list[int]]): ``[circle, gap, count]`` triples.

    """

    circles: list[list[str]] = Field(min_length=1)
    signs: dict[str, str] = Field(default_factory=dict)
    cuts: list[list[int]] = Field(default_factory=list)

    @field_validator("circles")
    @classmethod
    def check_markers(cls, circles: list[list[str]]) -> list[list[str]]:
        """Every marker must read ``O<id>`` or ``U<id>``."""
        for circle in circles:
            for marker in circle:
                if not _MARKER.match(marker):
                    msg = f"Invalid marker {marker!r}. Expected O<id> or U<id>."
                    raise ValueError(msg)
        return circles

    @field_validator("signs")
    @classmethod
    def check_signs(cls, signs: dict[str, str]) -> dict[str, str]:
        """Keys are positive integers and values are ``+`` or ``-``."""
        for key, value in signs.items():
            if not key.isdigit() or value not in ("+", "-"):
                msg = f"Invalid sign entry {key!r}: {value!r}."
                raise ValueError(msg)
        return signs

    @field_validator("cuts")
    @classmethod
    def check_cuts(cls, cuts: list[list[int]]) -> list[list[int]]:
        """Each entry is a nonnegative ``[circle, gap, count]`` triple."""
        for entry in cuts:
            if len(entry) != 3 or min(entry) < 0:  # noqa: PLR2004
                msg = f"Invalid cut entry {entry}. Expected [circle, gap, count]."
                raise ValueError(msg)
        return cuts

    def to_diagram(self) -> GaussDiagram:
        """Build the Gauss diagram; structural checks are left to ``validate``."""
        circles = []
        for circle in self.circles:
            markers = []
            for token in circle:
                role, chord = _MARKER.match(token).groups()  # type: ignore[union-attr]
                markers.append(Marker(int(chord), role == "O"))
            circles.append(markers)
        return GaussDiagram(circles=circles, signs={int(k): Sign.from_symbol(v) for k, v in self.signs.items()})

    def to_cut_system(self) -> CutSystem:
        """Build the cut system from the ``cuts`` triples."""
        return CutSystem((Gap(c, g), n) for c, g, n in self.cuts)

    @classmethod
    def from_domain(cls, diagram: GaussDiagram, cuts: CutSystem | None = None) -> "DiagramDocument":
        """Serialize a diagram and cut system with fields and arrays in canonical order."""
        return cls(
            circles=[[f"{m.role}{m.chord}" for m in circle] for circle in diagram.circles],
            signs={str(k): s.symbol for k, s in diagram.signs},
            cuts=[[g.circle, g.index, n] for g, n in (cuts or CutSystem.empty()).counts],
        )
