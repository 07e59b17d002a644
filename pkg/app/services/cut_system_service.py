"""Cut systems: alternate orientations, canonical systems, cut point moves and move paths.

A set of cut points is a cut system when the diagram, with the points read as
bars, admits an alternate orientation: the orientation flips at every chord
endpoint and every cut point, and each chord has one sink and one source end.
Over/under information plays no part.
"""

import random
from collections import Counter
from itertools import combinations

import networkx as nx

from app.exceptions.cut_system_exception import (
    CanonicalCutSystemError,
    CutMovePreconditionError,
    CutSystemSearchError,
    InvalidCutSystemError,
)
from app.exceptions.diagram_exception import NotAKnotError
from app.models.cut_system_model import AlternateOrientation, CutMove, CutMoveKind, CutSystem, Direction, SubArc
from app.models.gauss_diagram_model import EndpointRef, Gap, GaussDiagram
from app.models.pd_diagram_model import PDDiagram
from app.services.diagram_service import validate_cut_system
from app.services.pd_code_service import trace_pd
from app.utils.logger_util import get_logger

logger = get_logger("cuts")


def _marker_index(diagram: GaussDiagram, cuts: CutSystem, ref: EndpointRef) -> int:
    """Index of a chord endpoint when cut points are counted as markers too."""
    return ref.position + sum(cuts.count(Gap(ref.circle, g)) for g in range(ref.position))


def _require_gaps(diagram: GaussDiagram, cuts: CutSystem) -> None:
    problems = validate_cut_system(diagram, cuts)
    if problems:
        raise InvalidCutSystemError("; ".join(problems))


def alternate_orientation(diagram: GaussDiagram, cuts: CutSystem) -> AlternateOrientation | None:
    """Find an alternate orientation of ``(diagram, cuts)``.

    Every circle gets a base direction; the type of a marker is the base XOR the
    parity of its index. Each chord asks for opposite types at its two ends, which
    is a parity constraint between two circles, solved as a 2-colouring.

    Args:
        diagram (GaussDiagram): A valid diagram.
        cuts (CutSystem): Points on the gaps of ``diagram``.

    Returns:
        AlternateOrientation | None: The orientation in which the lowest circle of every
            constraint component starts forward, or None when none exists.

    Raises:
        InvalidCutSystemError: If ``cuts`` refers to gaps the diagram does not have.

    """
    _require_gaps(diagram, cuts)
    for c, circle in enumerate(diagram.circles):
        if (len(circle) + cuts.circle_total(c)) % 2:
            return None

    graph = nx.Graph()
    graph.add_nodes_from(("circle", c) for c in range(diagram.circle_count))
    indices: dict[int, tuple[int, int]] = {}
    for chord in diagram.chords:
        k_tail = _marker_index(diagram, cuts, chord.tail)
        k_head = _marker_index(diagram, cuts, chord.head)
        indices[chord.id] = (k_tail, k_head)
        # bases of the two circles must differ exactly when this is 1
        differ = 1 ^ (k_tail & 1) ^ (k_head & 1)
        if chord.is_self:
            if differ:
                return None
            continue
        ends = (("circle", chord.tail.circle), ("circle", chord.head.circle))
        if differ:
            graph.add_edge(*ends)
        else:
            graph.add_edge(ends[0], ("same", chord.id))
            graph.add_edge(("same", chord.id), ends[1])

    if not nx.is_bipartite(graph):
        return None
    colors = nx.bipartite.color(graph)
    bases = [True] * diagram.circle_count
    for component in nx.connected_components(graph):
        circles = sorted(node[1] for node in component if node[0] == "circle")
        anchor = colors[("circle", circles[0])]
        for c in circles:
            bases[c] = colors[("circle", c)] == anchor

    def forward(circle: int, k: int) -> bool:
        return bases[circle] ^ bool(k & 1)

    arcs: dict[SubArc, Direction] = {}
    for c, circle in enumerate(diagram.circles):
        if not circle:
            pieces = max(cuts.count(Gap(c, 0)), 1)
            for j in range(pieces):
                arcs[SubArc(c, 0, j)] = Direction.FORWARD if forward(c, j) else Direction.BACKWARD
            continue
        for g in range(len(circle)):
            start = _marker_index(diagram, cuts, EndpointRef(c, g))
            for j in range(cuts.count(Gap(c, g)) + 1):
                arcs[SubArc(c, g, j)] = Direction.FORWARD if forward(c, start + j) else Direction.BACKWARD

    sources = {
        chord.id: forward(chord.tail.circle, indices[chord.id][0]) for chord in diagram.chords
    }
    return AlternateOrientation(bases=tuple(bases), arc_direction=arcs, sources=sources)


def sinks_and_sources(diagram: GaussDiagram, orientation: AlternateOrientation) -> dict[int, tuple[str, str]]:
    """Report, per chord, whether its tail and head are a source or a sink."""
    report = {}
    for chord_id in diagram.chord_ids:
        tail_is_source = orientation.sources[chord_id]
        report[chord_id] = ("source", "sink") if tail_is_source else ("sink", "source")
    return report


def is_cut_system(diagram: GaussDiagram, cuts: CutSystem) -> bool:
    """True iff ``cuts`` is a cut system of ``diagram``."""
    return alternate_orientation(diagram, cuts) is not None


def is_normal(diagram: GaussDiagram) -> bool:
    """True iff the diagram is normal (checkerboard colourable)."""
    return is_cut_system(diagram, CutSystem.empty())


def condition_star(diagram: GaussDiagram, cuts: CutSystem) -> bool:
    """Single-circle parity criterion for cut systems of a knot diagram.

    The total number of markers (chord endpoints plus cut points) must be even and,
    for every chord, the number of markers strictly between its tail and its head
    along the orientation must be even.

    Raises:
        NotAKnotError: If the diagram has more than one circle.

    """
    if not diagram.is_knot:
        raise NotAKnotError(diagram.circle_count)
    _require_gaps(diagram, cuts)
    circle = diagram.circles[0]
    sequence: list[int | None] = []
    for g, marker in enumerate(circle):
        sequence.append(marker.chord if marker.over else -marker.chord)
        sequence.extend([None] * cuts.count(Gap(0, g)))
    if not circle:
        sequence.extend([None] * cuts.count(Gap(0, 0)))
    if len(sequence) % 2:
        return False
    where = {item: i for i, item in enumerate(sequence) if item is not None}
    n = len(sequence)
    for chord_id in diagram.chord_ids:
        between = (where[-chord_id] - where[chord_id]) % n - 1
        if between % 2:
            return False
    return True


def canonical_cut_system(pd: PDDiagram) -> tuple[GaussDiagram, CutSystem]:
    """Build the Gauss diagram of a PD diagram and its canonical cut system.

    Each virtual crossing puts one cut point on each of its two outgoing edges.

    Args:
        pd (PDDiagram): A valid PD diagram.

    Returns:
        tuple[GaussDiagram, CutSystem]: ``pd_to_gauss(pd)`` and 2·(virtual crossings) points.

    Raises:
        CanonicalCutSystemError: If the construction is rejected by the checker.

    """
    trace = trace_pd(pd)
    counts: Counter = Counter()
    for crossing in pd.virtual:
        counts[trace.edge_gaps[crossing.c]] += 1
        counts[trace.edge_gaps[crossing.d]] += 1
    cuts = CutSystem(counts)
    if not is_cut_system(trace.diagram, cuts):
        raise CanonicalCutSystemError
    return trace.diagram, cuts


def flanking_gaps(diagram: GaussDiagram, chord_id: int) -> Counter:
    """The four gaps around the two endpoints of a chord, with multiplicity.

    Raises:
        CutMovePreconditionError: If the chord does not exist.

    """
    if chord_id not in diagram.sign_map:
        raise CutMovePreconditionError(f"III at chord {chord_id}", "no such chord")
    chord = diagram.chord(chord_id)
    return Counter(
        [diagram.gap_before(chord.tail), diagram.gap_after(chord.tail),
         diagram.gap_before(chord.head), diagram.gap_after(chord.head)],
    )


def apply_cut_move(diagram: GaussDiagram, cuts: CutSystem, move: CutMove) -> CutSystem:
    """Apply a cut point move.

    Moves I add or remove two points in one gap; moves III add or remove one point
    in each of the four gaps flanking a chord. Move II slides a point across a
    virtual crossing, which a Gauss diagram cannot see, so it has no counterpart.

    Args:
        diagram (GaussDiagram): The diagram the points live on.
        cuts (CutSystem): Current points.
        move (CutMove): The move.

    Returns:
        CutSystem: The new points.

    Raises:
        CutMovePreconditionError: If the location does not exist or there are not
            enough points to delete.

    """
    label = f"{move.kind.value} at {tuple(move.gap) if move.gap is not None else move.chord}"
    if move.kind.is_type_one:
        gap = Gap(*move.gap)
        if validate_cut_system(diagram, CutSystem({gap: 1})):
            raise CutMovePreconditionError(label, "no such gap")
        deltas = Counter({gap: 2})
    else:
        deltas = flanking_gaps(diagram, move.chord)
    if not move.kind.is_insert:
        for gap, n in deltas.items():
            if cuts.count(gap) < n:
                raise CutMovePreconditionError(label, f"gap {tuple(gap)} holds fewer than {n} point(s)")
        deltas = Counter({gap: -n for gap, n in deltas.items()})
    return cuts.shifted(deltas)


def candidate_moves(diagram: GaussDiagram) -> list[CutMove]:
    """Every move location on the diagram, in (kind, location) order."""
    moves = [
        CutMove(kind=kind, gap=gap) for gap in diagram.gaps() for kind in (CutMoveKind.I_INSERT, CutMoveKind.I_DELETE)
    ]
    moves += [
        CutMove(kind=kind, chord=chord_id)
        for chord_id in diagram.chord_ids
        for kind in (CutMoveKind.III_INSERT, CutMoveKind.III_DELETE)
    ]
    return sorted(moves, key=lambda m: m.sort_key)


def neighbors(diagram: GaussDiagram, cuts: CutSystem, cap: int) -> list[tuple[CutMove, CutSystem]]:
    """All cut systems one legal move away whose per-gap counts stay within ``cap``.

    Args:
        diagram (GaussDiagram): The diagram.
        cuts (CutSystem): Current points.
        cap (int): Upper bound on the count of any gap.

    Returns:
        list[tuple[CutMove, CutSystem]]: Distinct results, in (kind, location) order of their first move.

    Raises:
        ValueError: If ``cap`` is below the largest count already present.

    """
    if cap < cuts.max_count:
        msg = f"cap {cap} is below the current maximum count {cuts.max_count}"
        raise ValueError(msg)
    found: dict[CutSystem, CutMove] = {}
    for move in candidate_moves(diagram):
        try:
            result = apply_cut_move(diagram, cuts, move)
        except CutMovePreconditionError:
            continue
        if result.max_count <= cap and result not in found:
            found[result] = move
    return [(move, result) for result, move in found.items()]


def find_move_path(
    diagram: GaussDiagram,
    start: CutSystem,
    goal: CutSystem,
    max_depth: int,
    cap: int,
) -> list[CutMove] | None:
    """Search the lexicographically first shortest sequence of cut point moves from ``start`` to ``goal``.

    The search runs level by level from ``start``. Each level keeps its states in the
    order of their lexicographically first paths, and moves are tried in (kind, location)
    order, so the first path that reaches a state is the least one among its shortest paths.

    Args:
        diagram (GaussDiagram): The diagram.
        start (CutSystem): First cut system.
        goal (CutSystem): Second cut system.
        max_depth (int): Longest path considered.
        cap (int): Per-gap count bound for every intermediate system.

    Returns:
        list[CutMove] | None: The moves, or None when no path exists within the bounds.
            None does not mean that no path exists at all.

    Raises:
        InvalidCutSystemError: If either input is not a cut system.

    """
    for cuts in (start, goal):
        if not is_cut_system(diagram, cuts):
            raise InvalidCutSystemError
    if start == goal:
        return []
    if cap < max(start.max_count, goal.max_count):
        return None

    parent: dict[CutSystem, tuple[CutSystem, CutMove] | None] = {start: None}
    frontier = [start]
    for depth in range(1, max_depth + 1):
        next_frontier: list[CutSystem] = []
        for state in frontier:
            for move, result in neighbors(diagram, state, cap):
                if result in parent:
                    continue
                parent[result] = (state, move)
                if result == goal:
                    return _path_to(goal, parent)
                next_frontier.append(result)
        logger.debug("cut path search depth %d, frontier %d", depth, len(next_frontier))
        if not next_frontier:
            break
        frontier = next_frontier
    return None


def _path_to(state: CutSystem, parent: dict[CutSystem, tuple[CutSystem, CutMove] | None]) -> list[CutMove]:
    path: list[CutMove] = []
    while (link := parent[state]) is not None:
        state, move = link
        path.append(move)
    path.reverse()
    return path


def find_cut_system(diagram: GaussDiagram, per_gap: int = 2, max_total: int | None = None) -> CutSystem:
    """Search the smallest cut system with bounded size.

    Systems are tried by increasing total and then in gap order. A gap holding two
    points can always give them up (move I) and stay a cut system, so the smallest
    system uses at most one point per gap and ``per_gap`` only has to be at least 1.

    Args:
        diagram (GaussDiagram): The diagram.
        per_gap (int): Points allowed in one gap.
        max_total (int | None): Largest total tried; defaults to twice the chord count.

    Returns:
        CutSystem: The first cut system found.

    Raises:
        CutSystemSearchError: If no system exists within the bounds.

    """
    limit = 2 * diagram.chord_count if max_total is None else max_total
    gaps = diagram.gaps()
    if per_gap >= 1:
        for total in range(limit + 1):
            for chosen in combinations(gaps, total):
                cuts = CutSystem(dict.fromkeys(chosen, 1))
                if is_cut_system(diagram, cuts):
                    logger.debug("cut system of %d points found", total)
                    return cuts
    elif is_cut_system(diagram, CutSystem.empty()):
        return CutSystem.empty()
    raise CutSystemSearchError(limit)


def random_cut_system(
    diagram: GaussDiagram,
    rng: random.Random,
    max_points: int,
    moves: int = 3,
    cap: int = 2,
) -> CutSystem:
    """Draw a cut system by walking from the smallest one with random cut point moves.

    Only moves that keep the total within ``max_points`` (or within the smallest
    system's size, if that is larger) are taken.

    Args:
        diagram (GaussDiagram): The diagram.
        rng (random.Random): Seeded generator.
        max_points (int): Preferred total bound.
        moves (int): Largest number of moves taken.
        cap (int): Per-gap count bound.

    Returns:
        CutSystem: A cut system of ``diagram``.

    """
    cuts = find_cut_system(diagram, max_total=max(2 * diagram.chord_count, max_points))
    bound = max(max_points, cuts.total)
    for _ in range(rng.randint(0, moves)):
        options = [result for _, result in neighbors(diagram, cuts, max(cap, cuts.max_count)) if result.total <= bound]
        if not options:
            break
        cuts = rng.choice(options)
    return cuts
