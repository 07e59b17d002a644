"""Gauss diagram models.

A Gauss diagram is a set of oriented circles carrying signed, directed chords.
Each chord is drawn from its tail (over-passage) to its head (under-passage).
Virtual crossings leave no trace here.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import NamedTuple


class Sign(IntEnum):
    """Sign of a classical crossing."""

    POSITIVE = 1
    NEGATIVE = -1

    @property
    def symbol(self) -> str:
        """Return ``"+"`` or ``"-"``."""
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def from_symbol(cls, symbol: str) -> "Sign":
        """Build a sign from ``"+"`` or ``"-"``."""
        return cls.POSITIVE if symbol == "+" else cls.NEGATIVE


class Marker(NamedTuple):
    """One chord endpoint on a circle. ``over`` marks the tail (over-passage)."""

    chord: int
    over: bool

    @property
    def role(self) -> str:
        """Return ``"O"`` for a tail and ``"U"`` for a head."""
        return "O" if self.over else "U"


class EndpointRef(NamedTuple):
    """Position of a marker: circle index and index into its cyclic sequence."""

    circle: int
    position: int


class Gap(NamedTuple):
    """The stretch of circle after marker ``index`` (a circle without markers has the single gap 0)."""

    circle: int
    index: int


@dataclass(frozen=True)
class Chord:
    """A classical crossing seen from the Gauss diagram."""

    id: int
    sign: Sign
    tail: EndpointRef
    head: EndpointRef

    @property
    def is_self(self) -> bool:
        """True when both endpoints lie on the same circle."""
        return self.tail.circle == self.head.circle


@dataclass(frozen=True)
class GaussDiagram:
    """Oriented circles with signed, directed chords.

    Args:
        circles: One marker sequence per circle, read along the orientation.
        signs: Sign of every chord id. Stored as a sorted tuple of pairs.

    """

    circles: tuple[tuple[Marker, ...], ...]
    signs: tuple[tuple[int, Sign], ...] = field(default=())

    def __init__(
        self,
        circles: Iterable[Iterable[Marker | tuple[int, bool]]],
        signs: Mapping[int, int] | Iterable[tuple[int, int]] = (),
    ) -> None:
        """Normalize the inputs into hashable tuples."""
        pairs = signs.items() if isinstance(signs, Mapping) else signs
        object.__setattr__(
            self,
            "circles",
            tuple(tuple(Marker(int(m[0]), bool(m[1])) for m in circle) for circle in circles),
        )
        object.__setattr__(self, "signs", tuple(sorted((int(k), Sign(v)) for k, v in pairs)))

    @cached_property
    def sign_map(self) -> dict[int, Sign]:
        """Chord id to sign."""
        return dict(self.signs)

    @cached_property
    def endpoints(self) -> dict[int, dict[bool, EndpointRef]]:
        """Chord id to ``{True: tail ref, False: head ref}`` for every marker present."""
        found: dict[int, dict[bool, EndpointRef]] = {}
        for c, circle in enumerate(self.circles):
            for p, marker in enumerate(circle):
                found.setdefault(marker.chord, {})[marker.over] = EndpointRef(c, p)
        return found

    @property
    def chord_ids(self) -> tuple[int, ...]:
        """Sorted chord ids."""
        return tuple(k for k, _ in self.signs)

    @property
    def chords(self) -> tuple[Chord, ...]:
        """Chord records, sorted by id. Assumes the diagram is valid."""
        return tuple(
            Chord(id=k, sign=s, tail=self.endpoints[k][True], head=self.endpoints[k][False]) for k, s in self.signs
        )

    def chord(self, chord_id: int) -> Chord:
        """Return the chord with the given id."""
        ends = self.endpoints[chord_id]
        return Chord(id=chord_id, sign=self.sign_map[chord_id], tail=ends[True], head=ends[False])

    def sign_of(self, chord_id: int) -> Sign:
        """Return the sign of a chord."""
        return self.sign_map[chord_id]

    @property
    def circle_count(self) -> int:
        """Number of circles."""
        return len(self.circles)

    @property
    def chord_count(self) -> int:
        """Number of chords."""
        return len(self.signs)

    @property
    def is_knot(self) -> bool:
        """True for a single circle."""
        return len(self.circles) == 1

    def gap_count(self, circle: int) -> int:
        """Number of gaps of a circle: one per marker, and one for an empty circle."""
        return max(len(self.circles[circle]), 1)

    def gaps(self) -> tuple[Gap, ...]:
        """All gaps, circle by circle."""
        return tuple(Gap(c, g) for c in range(len(self.circles)) for g in range(self.gap_count(c)))

    def gap_before(self, ref: EndpointRef) -> Gap:
        """Gap that ends at the marker ``ref``."""
        return Gap(ref.circle, (ref.position - 1) % len(self.circles[ref.circle]))

    def gap_after(self, ref: EndpointRef) -> Gap:
        """Gap that starts at the marker ``ref``."""
        return Gap(ref.circle, ref.position)

    def marker_at(self, ref: EndpointRef) -> Marker:
        """Marker stored at ``ref``."""
        return self.circles[ref.circle][ref.position]

    def next_chord_id(self) -> int:
        """Smallest id larger than every chord id in use."""
        return max(self.chord_ids, default=0) + 1

    @classmethod
    def unknot(cls) -> "GaussDiagram":
        """The zero-crossing diagram of one circle."""
        return cls(circles=[()], signs={})
