"""Planar-diagram (PD) code models.

Classical records list their edges as (incoming-under, incoming-over, outgoing-under,
outgoing-over) and carry an explicit sign. Virtual records join a→c and b→d.
"""

from dataclasses import dataclass

from app.models.gauss_diagram_model import Sign


@dataclass(frozen=True)
class ClassicalCrossing:
    """A classical crossing: under strand a→c, over strand b→d."""

    sign: Sign
    a: int
    b: int
    c: int
    d: int

    @property
    def incoming(self) -> tuple[int, int]:
        """Incoming edges (under, over)."""
        return (self.a, self.b)

    @property
    def outgoing(self) -> tuple[int, int]:
        """Outgoing edges (under, over)."""
        return (self.c, self.d)


@dataclass(frozen=True)
class VirtualCrossing:
    """A virtual crossing: strands a→c and b→d, no over/under data."""

    a: int
    b: int
    c: int
    d: int

    @property
    def incoming(self) -> tuple[int, int]:
        """Incoming edges."""
        return (self.a, self.b)

    @property
    def outgoing(self) -> tuple[int, int]:
        """Outgoing edges."""
        return (self.c, self.d)


@dataclass(frozen=True)
class PDDiagram:
    """A virtual link diagram given by its classical and virtual crossings."""

    classical: tuple[ClassicalCrossing, ...]
    virtual: tuple[VirtualCrossing, ...] = ()

    @property
    def edges(self) -> tuple[int, ...]:
        """Sorted edge ids."""
        ids = {e for x in (*self.classical, *self.virtual) for e in (*x.incoming, *x.outgoing)}
        return tuple(sorted(ids))
