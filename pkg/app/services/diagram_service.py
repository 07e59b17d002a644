"""Global involutions, validation and small structural helpers for Gauss diagrams."""

from collections import Counter
from collections.abc import Iterable, Sequence

from app.exceptions.diagram_exception import InvalidDiagramError
from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import Chord, Gap, GaussDiagram, Marker, Sign


def switch_all(diagram: GaussDiagram) -> GaussDiagram:
    """Switch over/under at every classical crossing: arrows reverse, signs negate.

    Args:
        diagram (GaussDiagram): A valid diagram.

    Returns:
        GaussDiagram: The switched diagram (D♯ for a knot D).

    """
    return GaussDiagram(
        circles=[[Marker(m.chord, not m.over) for m in circle] for circle in diagram.circles],
        signs={k: Sign(-s) for k, s in diagram.signs},
    )


def mirror(diagram: GaussDiagram) -> GaussDiagram:
    """Reflect the diagram: signs negate, arrows and circles stay."""
    return GaussDiagram(circles=diagram.circles, signs={k: Sign(-s) for k, s in diagram.signs})


def mirror_switch(diagram: GaussDiagram, cuts: CutSystem) -> tuple[GaussDiagram, CutSystem]:
    """Reflect and switch every crossing, carrying the cut system along.

    The two sign negations cancel, so the result has the same circles and signs as
    the input with every arrow reversed. Cut counts stay in their gaps.

    Args:
        diagram (GaussDiagram): A valid diagram.
        cuts (CutSystem): Cut system on ``diagram``.

    Returns:
        tuple[GaussDiagram, CutSystem]: ``(D*, P*)``.

    """
    starred = GaussDiagram(
        circles=[[Marker(m.chord, not m.over) for m in circle] for circle in diagram.circles],
        signs=diagram.signs,
    )
    return starred, cuts


def validate(diagram: GaussDiagram) -> list[str]:
    """List every violated Gauss diagram invariant.

    Args:
        diagram (GaussDiagram): Any diagram, possibly malformed.

    Returns:
        list[str]: Violations; empty iff the diagram is valid.

    """
    violations: list[str] = []
    if not diagram.circles:
        violations.append("diagram has no circles")
    known = set(diagram.chord_ids)
    roles: dict[int, Counter[bool]] = {}
    for circle in diagram.circles:
        for marker in circle:
            roles.setdefault(marker.chord, Counter())[marker.over] += 1
    for chord_id in sorted(set(roles) - known):
        violations.append(f"marker refers to unknown chord {chord_id}")
    for chord_id in sorted(known):
        seen = roles.get(chord_id, Counter())
        if seen[True] == 0:
            violations.append(f"chord {chord_id} has no tail")
        if seen[False] == 0:
            violations.append(f"chord {chord_id} has no head")
        if seen[True] > 1:
            violations.append(f"chord {chord_id} has {seen[True]} tails")
        if seen[False] > 1:
            violations.append(f"chord {chord_id} has {seen[False]} heads")
    return violations


def require_valid(diagram: GaussDiagram) -> GaussDiagram:
    """Return the diagram, or raise if it is malformed.

    Raises:
        InvalidDiagramError: If ``validate`` reports anything.

    """
    violations = validate(diagram)
    if violations:
        raise InvalidDiagramError(violations)
    return diagram


def validate_chords(circle_sizes: Sequence[int], chords: Iterable[Chord]) -> list[str]:
    """Check chord records against circles of the given sizes.

    Args:
        circle_sizes (Sequence[int]): Number of marker positions on each circle.
        chords (Iterable[Chord]): Chord records with explicit endpoint references.

    Returns:
        list[str]: Violations; empty iff the records fill every position exactly once.

    """
    violations: list[str] = []
    if not circle_sizes:
        violations.append("diagram has no circles")
    used: Counter[tuple[int, int]] = Counter()
    ids: Counter[int] = Counter()
    for chord in chords:
        ids[chord.id] += 1
        if chord.id <= 0:
            violations.append(f"chord id {chord.id} is not positive")
        if chord.tail == chord.head:
            violations.append(f"chord {chord.id} has tail equal to head")
        for name, ref in (("tail", chord.tail), ("head", chord.head)):
            if not 0 <= ref.circle < len(circle_sizes) or not 0 <= ref.position < circle_sizes[ref.circle]:
                violations.append(f"chord {chord.id} {name} refers to missing position {tuple(ref)}")
            else:
                used[tuple(ref)] += 1
    violations.extend(f"chord id {k} is used {n} times" for k, n in sorted(ids.items()) if n > 1)
    for c, size in enumerate(circle_sizes):
        for p in range(size):
            if used[(c, p)] == 0:
                violations.append(f"position {(c, p)} carries no chord endpoint")
            elif used[(c, p)] > 1:
                violations.append(f"position {(c, p)} carries {used[(c, p)]} chord endpoints")
    return violations


def build_diagram(circle_sizes: Sequence[int], chords: Iterable[Chord]) -> GaussDiagram:
    """Assemble a diagram from chord records.

    Raises:
        InvalidDiagramError: If ``validate_chords`` reports anything.

    """
    chords = list(chords)
    violations = validate_chords(circle_sizes, chords)
    if violations:
        raise InvalidDiagramError(violations)
    circles: list[list[Marker | None]] = [[None] * size for size in circle_sizes]
    for chord in chords:
        circles[chord.tail.circle][chord.tail.position] = Marker(chord.id, over=True)
        circles[chord.head.circle][chord.head.position] = Marker(chord.id, over=False)
    return GaussDiagram(circles=circles, signs={chord.id: chord.sign for chord in chords})


def validate_cut_system(diagram: GaussDiagram, cuts: CutSystem) -> list[str]:
    """List gaps of a cut system that do not exist on the diagram."""
    return [
        f"gap {tuple(gap)} does not exist"
        for gap, _ in cuts.counts
        if not 0 <= gap.circle < diagram.circle_count or not 0 <= gap.index < diagram.gap_count(gap.circle)
    ]


def rotate_circle(diagram: GaussDiagram, cuts: CutSystem, circle: int, shift: int) -> tuple[GaussDiagram, CutSystem]:
    """Start a circle ``shift`` markers later; the cut counts follow their gaps.

    Args:
        diagram (GaussDiagram): A valid diagram.
        cuts (CutSystem): Cut system on ``diagram``.
        circle (int): Circle to rotate.
        shift (int): Old position that becomes position 0.

    Returns:
        tuple[GaussDiagram, CutSystem]: The same diagram read from another start point.

    """
    markers = diagram.circles[circle]
    m = len(markers)
    if m == 0:
        return diagram, cuts
    circles = list(diagram.circles)
    circles[circle] = tuple(markers[(shift + k) % m] for k in range(m))
    moved = {
        (Gap(g.circle, (g.index - shift) % m) if g.circle == circle else g): n for g, n in cuts.counts
    }
    return GaussDiagram(circles=circles, signs=diagram.signs), CutSystem(moved)


def disjoint_union(first: GaussDiagram, second: GaussDiagram) -> GaussDiagram:
    """Place two diagrams side by side; chords of ``second`` are renumbered after those of ``first``."""
    offset = first.next_chord_id() - 1
    circles = [*first.circles, *([Marker(m.chord + offset, m.over) for m in c] for c in second.circles)]
    signs = {**first.sign_map, **{k + offset: s for k, s in second.signs}}
    return GaussDiagram(circles=circles, signs=signs)
