"""PD code parsing and conversion of PD diagrams to Gauss diagrams.

Line format: ``X+(a,b,c,d)``, ``X-(a,b,c,d)`` or ``V(a,b,c,d)``, one record per
line; ``#`` starts a comment. Classical slots are (incoming-under, incoming-over,
outgoing-under, outgoing-over); both kinds of record join a→c and b→d.
"""

import re
from collections import Counter
from dataclasses import dataclass

from app.exceptions.diagram_exception import PDCodeSyntaxError
from app.models.gauss_diagram_model import Gap, GaussDiagram, Marker, Sign
from app.models.pd_diagram_model import ClassicalCrossing, PDDiagram, VirtualCrossing

_RECORD = re.compile(
    r"^(?P<kind>X(?P<sign>[+-])|V)\s*\(\s*(?P<a>-?\d+)\s*,\s*(?P<b>-?\d+)\s*,\s*(?P<c>-?\d+)\s*,\s*(?P<d>-?\d+)\s*\)$",
)


def parse_pd_code(text: str) -> PDDiagram:
    """Parse PD records.

    Args:
        text (str): One record per line.

    Returns:
        PDDiagram: The diagram, checked to chain into closed oriented components.

    Raises:
        PDCodeSyntaxError: On a malformed line, or when an edge is not used exactly
            once as an incoming and once as an outgoing slot.

    """
    classical: list[ClassicalCrossing] = []
    virtual: list[VirtualCrossing] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _RECORD.match(line)
        if match is None:
            raise PDCodeSyntaxError(line_number, f"cannot parse {line!r}")
        a, b, c, d = (int(match.group(slot)) for slot in "abcd")
        if match.group("sign"):
            classical.append(ClassicalCrossing(Sign.from_symbol(match.group("sign")), a, b, c, d))
        else:
            virtual.append(VirtualCrossing(a, b, c, d))
    diagram = PDDiagram(classical=tuple(classical), virtual=tuple(virtual))
    check_pd_diagram(diagram)
    return diagram


def check_pd_diagram(diagram: PDDiagram) -> None:
    """Check that every edge is used once as an incoming and once as an outgoing slot.

    Raises:
        PDCodeSyntaxError: When the records do not chain into closed components.

    """
    if not diagram.classical and not diagram.virtual:
        raise PDCodeSyntaxError(None, "no crossings")
    incoming: Counter[int] = Counter()
    outgoing: Counter[int] = Counter()
    for crossing in (*diagram.classical, *diagram.virtual):
        incoming.update(crossing.incoming)
        outgoing.update(crossing.outgoing)
    problems = []
    for edge in sorted(set(incoming) | set(outgoing)):
        uses = incoming[edge] + outgoing[edge]
        if uses != 2:  # noqa: PLR2004
            problems.append(f"edge {edge} appears {uses} time(s)")
        elif incoming[edge] != 1:
            kind = "incoming" if incoming[edge] else "outgoing"
            problems.append(f"edge {edge} is used twice as {kind}")
    if problems:
        raise PDCodeSyntaxError(None, "; ".join(problems))


@dataclass(frozen=True)
class PDTrace:
    """A PD diagram traced into circles.

    Args:
        diagram: The Gauss diagram (chord ``i`` is the ``i``-th classical record).
        edge_gaps: For every edge, the gap of the Gauss diagram it lies in.

    """

    diagram: GaussDiagram
    edge_gaps: dict[int, Gap]


def trace_pd(pd: PDDiagram) -> PDTrace:
    """Follow the edge chains of a PD diagram.

    Each component starts at its smallest unvisited edge id. A classical crossing
    entered on its over slot contributes a tail, on its under slot a head; virtual
    crossings contribute nothing.

    Args:
        pd (PDDiagram): A valid PD diagram.

    Returns:
        PDTrace: The Gauss diagram plus the gap of every edge.

    """
    # edge -> (is_classical, record index, entered on the over/b slot)
    entry: dict[int, tuple[bool, int, bool]] = {}
    for i, x in enumerate(pd.classical):
        entry[x.a] = (True, i, False)
        entry[x.b] = (True, i, True)
    for i, v in enumerate(pd.virtual):
        entry[v.a] = (False, i, False)
        entry[v.b] = (False, i, True)

    circles: list[list[Marker]] = []
    edge_gaps: dict[int, Gap] = {}
    visited: set[int] = set()
    for start in sorted(entry):
        if start in visited:
            continue
        circle: list[Marker] = []
        pending: list[tuple[int, int]] = []
        edge = start
        while edge not in visited:
            visited.add(edge)
            pending.append((edge, len(circle)))
            is_classical, index, over = entry[edge]
            record = pd.classical[index] if is_classical else pd.virtual[index]
            if is_classical:
                circle.append(Marker(index + 1, over))
            edge = record.d if over else record.c
        c = len(circles)
        m = len(circle)
        for e, emitted in pending:
            edge_gaps[e] = Gap(c, (emitted - 1) % m if m else 0)
        circles.append(circle)

    signs = {i + 1: x.sign for i, x in enumerate(pd.classical)}
    return PDTrace(diagram=GaussDiagram(circles=circles, signs=signs), edge_gaps=edge_gaps)


def pd_to_gauss(pd: PDDiagram) -> GaussDiagram:
    """Convert a PD diagram to its Gauss diagram (one circle per component).

    Args:
        pd (PDDiagram): A valid PD diagram.

    Returns:
        GaussDiagram: Circles traced along the edges; virtual crossings vanish.

    """
    return trace_pd(pd).diagram


def format_pd_code(pd: PDDiagram) -> str:
    """Render PD records, classical first, one per line."""
    lines = [f"X{x.sign.symbol}({x.a},{x.b},{x.c},{x.d})" for x in pd.classical]
    lines += [f"V({v.a},{v.b},{v.c},{v.d})" for v in pd.virtual]
    return "\n".join(lines)
