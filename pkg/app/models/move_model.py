"""Move kinds and replayable move traces."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any


class MoveKind(StrEnum):
    """Diagram rewrites understood by the move engine and by trace replay."""

    R1_INSERT = "r1_insert"
    R1_REMOVE = "r1_remove"
    R2_INSERT = "r2_insert"
    R2_REMOVE = "r2_remove"
    R3 = "r3"
    K_FLYPE = "k_flype"


class ArrowDirection(StrEnum):
    """Which endpoint of an inserted kink chord comes first along the circle."""

    OVER_FIRST = "O-first"
    UNDER_FIRST = "U-first"


class R2Variant(StrEnum):
    """Relative direction of the two strands of a Reidemeister II bigon."""

    PARALLEL = "parallel"
    ANTIPARALLEL = "antiparallel"


class R3Variant(StrEnum):
    """Order pattern of the triangle before the slide.

    With ``x`` = top/middle, ``y`` = top/bottom, ``z`` = middle/bottom chords,
    FORWARD reads ``x y`` on the top strand, ``x z`` on the middle strand and
    ``y z`` on the bottom strand; REVERSE reads every pair the other way round.
    """

    FORWARD = "forward"
    REVERSE = "reverse"

    @property
    def opposite(self) -> "R3Variant":
        """The pattern after the slide."""
        return R3Variant.REVERSE if self is R3Variant.FORWARD else R3Variant.FORWARD


@dataclass(frozen=True)
class MoveStep:
    """One applied rewrite.

    Args:
        kind: The move.
        params: JSON-compatible parameters that reproduce the move.
        chord_map: Old chord id to new chord id for the chords that survive.
        created: Ids of chords the move introduced.

    """

    kind: MoveKind
    params: Mapping[str, Any]
    chord_map: Mapping[int, int] = field(default_factory=dict)
    created: tuple[int, ...] = ()


@dataclass(frozen=True)
class MoveTrace:
    """Seed plus steps of a random walk; replaying the steps reproduces the result."""

    seed: int
    steps: tuple[MoveStep, ...] = ()
