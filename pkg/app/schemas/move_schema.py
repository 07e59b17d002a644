"""JSON schemas for cut point moves and diagram move traces."""

from typing import Any

from pydantic import BaseModel, Field, model_validator

from app.models.cut_system_model import CutMove, CutMoveKind
from app.models.gauss_diagram_model import Gap
from app.models.move_model import MoveKind, MoveStep, MoveTrace


class CutMoveSchema(BaseModel):
    """``{"kind": "I_insert", "gap": [c, g]}`` or ``{"kind": "III_insert", "chord": id}``."""

    kind: CutMoveKind
    gap: list[int] | None = None
    chord: int | None = None

    @model_validator(mode="after")
    def check_location(self) -> "CutMoveSchema":
        """A move I needs a two-entry gap, a move III a chord id."""
        if self.kind.is_type_one and (self.gap is None or len(self.gap) != 2):  # noqa: PLR2004
            msg = f"{self.kind.value} needs a gap [circle, index]"
            raise ValueError(msg)
        if not self.kind.is_type_one and self.chord is None:
            msg = f"{self.kind.value} needs a chord id"
            raise ValueError(msg)
        return self

    def to_move(self) -> CutMove:
        """Build the domain move."""
        if self.kind.is_type_one:
            return CutMove(kind=self.kind, gap=Gap(*self.gap))  # type: ignore[misc]
        return CutMove(kind=self.kind, chord=self.chord)

    @classmethod
    def from_move(cls, move: CutMove) -> "CutMoveSchema":
        """Serialize a domain move."""
        if move.gap is not None:
            return cls(kind=move.kind, gap=list(move.gap))
        return cls(kind=move.kind, chord=move.chord)


class MoveStepSchema(BaseModel):
    """One step of a move trace."""

    kind: MoveKind
    params: dict[str, Any]
    chord_map: dict[str, int] = Field(default_factory=dict)
    created: list[int] = Field(default_factory=list)


class MoveTraceSchema(BaseModel):
    """A replayable trace: seed plus steps."""

    seed: int
    steps: list[MoveStepSchema] = Field(default_factory=list)

    def to_trace(self) -> MoveTrace:
        """Build the domain trace."""
        return MoveTrace(
            seed=self.seed,
            steps=tuple(
                MoveStep(
                    kind=step.kind,
                    params=step.params,
                    chord_map={int(k): v for k, v in step.chord_map.items()},
                    created=tuple(step.created),
                )
                for step in self.steps
            ),
        )

    @classmethod
    def from_trace(cls, trace: MoveTrace) -> "MoveTraceSchema":
        """Serialize a domain trace."""
        return cls(
            seed=trace.seed,
            steps=[
                MoveStepSchema(
                    kind=step.kind,
                    params=dict(step.params),
                    chord_map={str(k): v for k, v in sorted(step.chord_map.items())},
                    created=list(step.created),
                )
                for step in trace.steps
            ],
        )
