"""Signed Gauss code parsing, canonical forms and emission.

Grammar: components separated by ``|``; a component is a sequence of tokens
``(O|U)<id>(+|-)`` (whitespace between tokens is optional) or ``()`` for a
circle without crossings. ``O`` marks the tail (over), ``U`` the head (under).
"""

import re
from collections import Counter
from dataclasses import dataclass

from app.exceptions.diagram_exception import GaussCodeSyntaxError
from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import Gap, GaussDiagram, Marker, Sign

_TOKEN = re.compile(r"\s*(?:(?P<empty>\(\s*\))|(?P<role>[OU])(?P<id>\d+)(?P<sign>[+-]))")
_SEPARATOR = re.compile(r"\s*\|")
_TRAILING = re.compile(r"\s*")

EMPTY_COMPONENT = "()"


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a signed Gauss code.

    Args:
        text (str): Code such as ``"O1+U2+O3+U1+O2+U3+"`` or ``"O1+U2- | U1+O2-"``.

    Returns:
        GaussDiagram: The diagram; chord ids are kept as written.

    Raises:
        GaussCodeSyntaxError: On a syntax error, an id not used exactly twice,
            an id used twice in the same role, or disagreeing signs.

    """
    circles: list[list[Marker]] = []
    current: list[Marker] = []
    saw_empty = False
    first_seen: dict[int, tuple[int, bool, Sign]] = {}
    occurrences: Counter[int] = Counter()
    signs: dict[int, Sign] = {}
    pos = 0

    def close_component(at: int) -> None:
        nonlocal current, saw_empty
        if not current and not saw_empty:
            raise GaussCodeSyntaxError(text, at, "empty component (write () for a circle without crossings)")
        circles.append(current)
        current = []
        saw_empty = False

    while True:
        end = _TRAILING.match(text, pos)
        if end is not None and end.end() == len(text):
            close_component(len(text))
            break
        separator = _SEPARATOR.match(text, pos)
        if separator is not None:
            close_component(separator.end() - 1)
            pos = separator.end()
            continue
        token = _TOKEN.match(text, pos)
        if token is None:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise GaussCodeSyntaxError(text, offset, f"unexpected character {text[offset]!r}")
        at = token.start("empty") if token.group("empty") else token.start("role")
        if token.group("empty"):
            if current or saw_empty:
                raise GaussCodeSyntaxError(text, at, "() must be the only token of its component")
            saw_empty = True
        else:
            if saw_empty:
                raise GaussCodeSyntaxError(text, at, "() must be the only token of its component")
            chord_id = int(token.group("id"))
            over = token.group("role") == "O"
            sign = Sign.from_symbol(token.group("sign"))
            occurrences[chord_id] += 1
            if occurrences[chord_id] > 2:  # noqa: PLR2004
                raise GaussCodeSyntaxError(text, at, f"chord {chord_id} appears more than twice")
            if chord_id in first_seen:
                _, first_over, first_sign = first_seen[chord_id]
                if first_over == over:
                    role = "O" if over else "U"
                    raise GaussCodeSyntaxError(text, at, f"chord {chord_id} appears twice as {role}")
                if first_sign != sign:
                    raise GaussCodeSyntaxError(text, at, f"sign mismatch for chord {chord_id}")
            else:
                first_seen[chord_id] = (at, over, sign)
            signs[chord_id] = sign
            current.append(Marker(chord_id, over))
        pos = token.end()

    for chord_id, (at, _, _) in first_seen.items():
        if occurrences[chord_id] != 2:  # noqa: PLR2004
            raise GaussCodeSyntaxError(text, at, f"chord {chord_id} appears only once")
    return GaussDiagram(circles=circles, signs=signs)


def format_gauss_code(diagram: GaussDiagram) -> str:
    """Render a diagram as written, without canonicalization.

    Args:
        diagram (GaussDiagram): Diagram to render.

    Returns:
        str: Code with the diagram's own ids, rotations and circle order.

    """
    return "|".join(_format_circle(diagram, circle) for circle in diagram.circles)


def _format_circle(diagram: GaussDiagram, circle: tuple[Marker, ...]) -> str:
    if not circle:
        return EMPTY_COMPONENT
    return "".join(f"{m.role}{m.chord}{diagram.sign_of(m.chord).symbol}" for m in circle)


@dataclass(frozen=True)
class CanonicalLayout:
    """How a diagram maps onto its canonical form.

    Args:
        order: Original circle index for each canonical circle.
        rotations: Per canonical circle, the original position that becomes position 0.
        renumbering: Original chord id to canonical chord id.

    """

    order: tuple[int, ...]
    rotations: tuple[int, ...]
    renumbering: dict[int, int]


def canonical_layout(diagram: GaussDiagram) -> CanonicalLayout:
    """Find the rotation, circle order and renumbering of the canonical form.

    Each circle is rotated to its lexicographically least linearization, chords are
    renumbered by first occurrence and circles are ordered lexicographically. Ties are
    kept side by side until they are broken, so the result does not depend on ids.

    Args:
        diagram (GaussDiagram): A valid diagram.

    Returns:
        CanonicalLayout: The layout of the canonical form.

    """
    signs = diagram.sign_map
    empties = [c for c, circle in enumerate(diagram.circles) if not circle]
    busy = [c for c, circle in enumerate(diagram.circles) if circle]

    # (order, rotations, renumbering)
    states: list[tuple[tuple[int, ...], tuple[int, ...], dict[int, int]]] = [((), (), {})]
    while states and len(states[0][0]) < len(busy):
        best_key: tuple[tuple[int, int, int], ...] | None = None
        best: dict[tuple, tuple[tuple[int, ...], tuple[int, ...], dict[int, int]]] = {}
        for order, rotations, renumbering in states:
            for c in busy:
                if c in order:
                    continue
                circle = diagram.circles[c]
                for r in range(len(circle)):
                    key, extended = _block_key(circle, r, renumbering, signs)
                    if best_key is None or key < best_key:
                        best_key = key
                        best = {}
                    if key == best_key:
                        state = ((*order, c), (*rotations, r), extended)
                        best.setdefault((frozenset(state[0]), tuple(sorted(extended.items()))), state)
        states = list(best.values())

    order, rotations, renumbering = states[0]
    return CanonicalLayout(
        order=(*empties, *order),
        rotations=(*(0 for _ in empties), *rotations),
        renumbering=renumbering,
    )


def _block_key(
    circle: tuple[Marker, ...],
    rotation: int,
    renumbering: dict[int, int],
    signs: dict[int, Sign],
) -> tuple[tuple[tuple[int, int, int], ...], dict[int, int]]:
    extended = dict(renumbering)
    key: list[tuple[int, int, int]] = []
    m = len(circle)
    for k in range(m):
        marker = circle[(rotation + k) % m]
        if marker.chord not in extended:
            extended[marker.chord] = len(extended) + 1
        key.append((extended[marker.chord], 0 if marker.over else 1, 0 if signs[marker.chord] > 0 else 1))
    return tuple(key), extended


def canonicalize(diagram: GaussDiagram, cuts: CutSystem | None = None) -> tuple[GaussDiagram, CutSystem]:
    """Rewrite a diagram (and a cut system on it) into canonical form.

    Args:
        diagram (GaussDiagram): A valid diagram.
        cuts (CutSystem | None): Optional cut system, carried along gap by gap.

    Returns:
        tuple[GaussDiagram, CutSystem]: Canonical diagram and the matching cut system.

    """
    layout = canonical_layout(diagram)
    circles = []
    new_cuts: dict[Gap, int] = {}
    old_position = {c: i for i, c in enumerate(layout.order)}
    for new_c, (old_c, r) in enumerate(zip(layout.order, layout.rotations, strict=True)):
        circle = diagram.circles[old_c]
        m = len(circle)
        circles.append(
            [Marker(layout.renumbering[circle[(r + k) % m].chord], circle[(r + k) % m].over) for k in range(m)],
        )
    for gap, n in (cuts or CutSystem.empty()).counts:
        m = diagram.gap_count(gap.circle)
        r = layout.rotations[old_position[gap.circle]]
        new_cuts[Gap(old_position[gap.circle], (gap.index - r) % m)] = n
    signs = {layout.renumbering[k]: s for k, s in diagram.signs}
    return GaussDiagram(circles=circles, signs=signs), CutSystem(new_cuts)


def emit_gauss_code(diagram: GaussDiagram) -> str:
    """Render the canonical Gauss code of a diagram.

    Args:
        diagram (GaussDiagram): A valid diagram.

    Returns:
        str: Canonical code; ``parse_gauss_code`` of it gives the canonical diagram.

    """
    canonical, _ = canonicalize(diagram)
    return format_gauss_code(canonical)
