"""Cut systems, alternate orientations and cut point moves."""

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property
from typing import NamedTuple

from app.models.gauss_diagram_model import Gap


@dataclass(frozen=True)
class CutSystem:
    """Number of cut points in each gap. Points sharing a gap are unordered."""

    counts: tuple[tuple[Gap, int], ...]

    def __init__(self, counts: Mapping[Gap, int] | Iterable[tuple[Gap | tuple[int, int], int]] = ()) -> None:
        """Drop zero entries and sort the rest.

        Raises:
            ValueError: If a count is negative.

        """
        pairs = counts.items() if isinstance(counts, Mapping) else counts
        merged: Counter[Gap] = Counter()
        for gap, n in pairs:
            if n < 0:
                msg = f"negative cut count {n} at gap {tuple(gap)}"
                raise ValueError(msg)
            merged[Gap(*gap)] += n
        object.__setattr__(self, "counts", tuple(sorted((g, n) for g, n in merged.items() if n)))

    @cached_property
    def count_map(self) -> dict[Gap, int]:
        """Gap to count, nonzero entries only."""
        return dict(self.counts)

    def count(self, gap: Gap) -> int:
        """Points in a gap."""
        return self.count_map.get(gap, 0)

    @property
    def total(self) -> int:
        """Total number of cut points."""
        return sum(n for _, n in self.counts)

    def circle_total(self, circle: int) -> int:
        """Points on one circle."""
        return sum(n for g, n in self.counts if g.circle == circle)

    @property
    def max_count(self) -> int:
        """Largest count in any gap (0 for the empty system)."""
        return max((n for _, n in self.counts), default=0)

    def shifted(self, deltas: Mapping[Gap, int]) -> "CutSystem":
        """Add per-gap deltas.

        Raises:
            ValueError: If a count would become negative.

        """
        merged = Counter(self.count_map)
        for gap, delta in deltas.items():
            merged[gap] += delta
        return CutSystem(merged.items())

    @classmethod
    def empty(cls) -> "CutSystem":
        """The cut system with no points."""
        return cls(())


class Direction(StrEnum):
    """Direction of a sub-arc relative to the circle orientation."""

    FORWARD = "forward"
    BACKWARD = "backward"


class SubArc(NamedTuple):
    """A piece of a gap: the gap is cut into ``count + 1`` pieces by its points."""

    circle: int
    gap: int
    piece: int


@dataclass(frozen=True)
class AlternateOrientation:
    """An orientation that flips at every chord endpoint and cut point.

    Args:
        bases: Per circle, True when the sub-arc leaving the first marker points forward.
        arc_direction: Direction of every sub-arc.
        sources: Per chord id, True when its tail is the source endpoint (head is then the sink).

    """

    bases: tuple[bool, ...]
    arc_direction: Mapping[SubArc, Direction]
    sources: Mapping[int, bool]


class CutMoveKind(StrEnum):
    """Cut point moves that are visible on a Gauss diagram (move II is the identity here)."""

    I_INSERT = "I_insert"
    I_DELETE = "I_delete"
    III_INSERT = "III_insert"
    III_DELETE = "III_delete"

    @property
    def is_type_one(self) -> bool:
        """True for the pair insert/delete moves that act on a single gap."""
        return self in (CutMoveKind.I_INSERT, CutMoveKind.I_DELETE)

    @property
    def is_insert(self) -> bool:
        """True for insertions."""
        return self in (CutMoveKind.I_INSERT, CutMoveKind.III_INSERT)


@dataclass(frozen=True)
class CutMove:
    """One cut point move: a gap for moves I, a chord id for moves III."""

    kind: CutMoveKind
    gap: Gap | None = None
    chord: int | None = None

    def __post_init__(self) -> None:
        """Check that the location matches the kind.

        Raises:
            ValueError: If a type I move has no gap or a type III move has no chord.

        """
        if self.kind.is_type_one and self.gap is None:
            msg = f"{self.kind} needs a gap"
            raise ValueError(msg)
        if not self.kind.is_type_one and self.chord is None:
            msg = f"{self.kind} needs a chord"
            raise ValueError(msg)

    @property
    def sort_key(self) -> tuple[str, tuple[int, ...]]:
        """Lexicographic key on (kind, location) used for deterministic search."""
        location = tuple(self.gap) if self.gap is not None else (self.chord or 0,)
        return (self.kind.value, location)

    def inverse(self) -> "CutMove":
        """The move that undoes this one."""
        flipped = {
            CutMoveKind.I_INSERT: CutMoveKind.I_DELETE,
            CutMoveKind.I_DELETE: CutMoveKind.I_INSERT,
            CutMoveKind.III_INSERT: CutMoveKind.III_DELETE,
            CutMoveKind.III_DELETE: CutMoveKind.III_INSERT,
        }[self.kind]
        return CutMove(kind=flipped, gap=self.gap, chord=self.chord)
