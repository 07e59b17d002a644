"""Reidemeister rewrites, K-flypes and seeded random equivalence walks on Gauss diagrams.

Virtual Reidemeister moves and the mixed move do not change a Gauss diagram, so
only the classical moves need rewriting here. Chord ids are stable: inserted
chords get fresh ids above every id in use and no surviving chord is renamed.
"""

import random
from collections.abc import Callable, Mapping
from typing import Any

from app.exceptions.move_exception import MovePatternMismatchError, UnknownChordError
from app.models.gauss_diagram_model import EndpointRef, Gap, GaussDiagram, Marker, Sign
from app.models.move_model import ArrowDirection, MoveKind, MoveStep, MoveTrace, R2Variant, R3Variant
from app.utils.logger_util import get_logger

logger = get_logger("moves")

DEFAULT_WALK_WEIGHTS: Mapping[str, int] = {"r1": 40, "r2": 40, "r3": 10, "flype": 10}

# Blocks of adjacent markers for a Reidemeister III triangle, as (chord role, is tail).
# x joins the top and middle strands, y the top and bottom, z the middle and bottom.
R3_PATTERNS: Mapping[R3Variant, tuple[tuple[tuple[str, bool], tuple[str, bool]], ...]] = {
    R3Variant.FORWARD: (
        (("x", True), ("y", True)),
        (("x", False), ("z", True)),
        (("y", False), ("z", False)),
    ),
    R3Variant.REVERSE: (
        (("y", True), ("x", True)),
        (("z", True), ("x", False)),
        (("z", False), ("y", False)),
    ),
}


def _require_chord(diagram: GaussDiagram, chord_id: int) -> None:
    if chord_id not in diagram.sign_map:
        raise UnknownChordError(chord_id)


def _insert_blocks(
    diagram: GaussDiagram,
    blocks: list[tuple[Gap, list[Marker]]],
    signs: Mapping[int, Sign],
) -> GaussDiagram:
    """Insert marker blocks right after the marker that opens each gap, in list order per gap."""
    circles: list[list[Marker]] = []
    for c, circle in enumerate(diagram.circles):
        rebuilt: list[Marker] = []
        for g in range(diagram.gap_count(c)):
            if g < len(circle):
                rebuilt.append(circle[g])
            for gap, block in blocks:
                if gap == (c, g):
                    rebuilt.extend(block)
        circles.append(rebuilt)
    return GaussDiagram(circles=circles, signs={**diagram.sign_map, **signs})


def _remove_chords(diagram: GaussDiagram, chord_ids: set[int]) -> GaussDiagram:
    return GaussDiagram(
        circles=[[m for m in circle if m.chord not in chord_ids] for circle in diagram.circles],
        signs={k: s for k, s in diagram.signs if k not in chord_ids},
    )


def _check_gap(diagram: GaussDiagram, gap: Gap, move: str) -> None:
    if not 0 <= gap.circle < diagram.circle_count or not 0 <= gap.index < diagram.gap_count(gap.circle):
        raise MovePatternMismatchError(move, f"gap {tuple(gap)} does not exist")


def _adjacent(diagram: GaussDiagram, first: EndpointRef, second: EndpointRef) -> bool:
    """True when ``second`` directly follows ``first`` on a circle of at least three markers."""
    size = len(diagram.circles[first.circle])
    if first.circle != second.circle or size < 3:  # noqa: PLR2004
        return False
    return (first.position + 1) % size == second.position


def _paired(diagram: GaussDiagram, first: EndpointRef, second: EndpointRef) -> bool:
    """True when two markers are neighbours on one circle, in either order."""
    if first.circle != second.circle:
        return False
    size = len(diagram.circles[first.circle])
    return (first.position - second.position) % size in (1, size - 1)


def r1_insert(diagram: GaussDiagram, gap: Gap, sign: Sign, arrow: ArrowDirection) -> GaussDiagram:
    """Add a kink: a new chord whose two endpoints sit next to each other in ``gap``.

    Args:
        diagram (GaussDiagram): A valid diagram.
        gap (Gap): Where the kink goes.
        sign (Sign): Sign of the new chord.
        arrow (ArrowDirection): Whether the tail or the head comes first.

    Returns:
        GaussDiagram: The diagram with chord ``diagram.next_chord_id()`` added.

    Raises:
        MovePatternMismatchError: If the gap does not exist.

    """
    _check_gap(diagram, gap, "r1_insert")
    new_id = diagram.next_chord_id()
    block = [Marker(new_id, True), Marker(new_id, False)]
    if arrow is ArrowDirection.UNDER_FIRST:
        block.reverse()
    return _insert_blocks(diagram, [(gap, block)], {new_id: sign})


def r1_remove(diagram: GaussDiagram, chord_id: int) -> GaussDiagram:
    """Remove a kink chord.

    Raises:
        UnknownChordError: If the chord does not exist.
        MovePatternMismatchError: If its endpoints are not neighbours on one circle.

    """
    _require_chord(diagram, chord_id)
    chord = diagram.chord(chord_id)
    size = len(diagram.circles[chord.tail.circle])
    neighbours = chord.is_self and (
        (chord.tail.position + 1) % size == chord.head.position
        or (chord.head.position + 1) % size == chord.tail.position
    )
    if not neighbours:
        raise MovePatternMismatchError("r1_remove", f"chord {chord_id} has markers between its endpoints")
    return _remove_chords(diagram, {chord_id})


def r2_insert(
    diagram: GaussDiagram,
    gap1: Gap,
    gap2: Gap,
    variant: R2Variant,
    first_sign: Sign = Sign.POSITIVE,
) -> GaussDiagram:
    """Push the strand in ``gap1`` over the strand in ``gap2``, creating a bigon.

    The over strand gets the tails of the new chords ``a`` and ``b``; the under strand
    gets their heads, in the same order for parallel strands and reversed for
    antiparallel ones. ``a`` has ``first_sign``, ``b`` the opposite sign. When both
    gaps coincide the over block comes first.

    Raises:
        MovePatternMismatchError: If a gap does not exist.

    """
    for gap in (gap1, gap2):
        _check_gap(diagram, gap, "r2_insert")
    a = diagram.next_chord_id()
    b = a + 1
    over = [Marker(a, True), Marker(b, True)]
    under = [Marker(a, False), Marker(b, False)]
    if variant is R2Variant.ANTIPARALLEL:
        under.reverse()
    return _insert_blocks(diagram, [(gap1, over), (gap2, under)], {a: first_sign, b: Sign(-first_sign)})


def r2_remove(diagram: GaussDiagram, chord_pair: tuple[int, int]) -> GaussDiagram:
    """Remove a bigon formed by two chords.

    Raises:
        UnknownChordError: If a chord does not exist.
        MovePatternMismatchError: If the chords do not form a bigon.

    """
    a, b = chord_pair
    for chord_id in chord_pair:
        _require_chord(diagram, chord_id)
    if a == b:
        raise MovePatternMismatchError("r2_remove", "the two chords must differ")
    if diagram.sign_of(a) == diagram.sign_of(b):
        raise MovePatternMismatchError("r2_remove", f"chords {a} and {b} have equal signs")
    first, second = diagram.chord(a), diagram.chord(b)
    if not _paired(diagram, first.tail, second.tail) or not _paired(diagram, first.head, second.head):
        raise MovePatternMismatchError("r2_remove", f"chords {a} and {b} do not bound a bigon")
    return _remove_chords(diagram, {a, b})


def r3(diagram: GaussDiagram, chord_triple: tuple[int, int, int], variant: R3Variant) -> GaussDiagram:
    """Slide a strand across the crossing of the other two.

    ``chord_triple`` names the chords ``(x, y, z)`` of the pattern table; the three
    blocks must currently read as ``variant``. Swapping the markers of every block
    yields the opposite variant.

    Raises:
        UnknownChordError: If a chord does not exist.
        MovePatternMismatchError: If the chords do not match the pattern.

    """
    for chord_id in chord_triple:
        _require_chord(diagram, chord_id)
    if len(set(chord_triple)) != 3:  # noqa: PLR2004
        raise MovePatternMismatchError("r3", "three distinct chords are needed")
    if len({diagram.sign_of(c) for c in chord_triple}) != 1:
        raise MovePatternMismatchError("r3", "the three chords must have equal signs")
    names = dict(zip(("x", "y", "z"), chord_triple, strict=True))
    ends = {c: diagram.endpoints[c] for c in chord_triple}
    swaps: dict[EndpointRef, Marker] = {}
    for (first_name, first_tail), (second_name, second_tail) in R3_PATTERNS[variant]:
        first = ends[names[first_name]][first_tail]
        second = ends[names[second_name]][second_tail]
        if not _adjacent(diagram, first, second):
            raise MovePatternMismatchError("r3", f"chords {chord_triple} do not read as the {variant} pattern")
        swaps[first] = diagram.marker_at(second)
        swaps[second] = diagram.marker_at(first)
    circles = [
        [swaps.get(EndpointRef(c, p), marker) for p, marker in enumerate(circle)]
        for c, circle in enumerate(diagram.circles)
    ]
    return GaussDiagram(circles=circles, signs=diagram.signs)


def k_flype(diagram: GaussDiagram, chord_id: int) -> GaussDiagram:
    """Reverse the arrow of a chord and keep its sign.

    Raises:
        UnknownChordError: If the chord does not exist.

    """
    _require_chord(diagram, chord_id)
    circles = [
        [Marker(m.chord, not m.over) if m.chord == chord_id else m for m in circle] for circle in diagram.circles
    ]
    return GaussDiagram(circles=circles, signs=diagram.signs)


def r1_kinks(diagram: GaussDiagram) -> list[int]:
    """Chords that ``r1_remove`` accepts."""
    found = []
    for chord in diagram.chords:
        try:
            r1_remove(diagram, chord.id)
        except MovePatternMismatchError:
            continue
        found.append(chord.id)
    return found


def r2_bigons(diagram: GaussDiagram) -> list[tuple[int, int]]:
    """Chord pairs that ``r2_remove`` accepts, smaller id first."""
    ids = diagram.chord_ids
    found = []
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            try:
                r2_remove(diagram, (a, b))
            except MovePatternMismatchError:
                continue
            found.append((a, b))
    return found


def r3_triangles(diagram: GaussDiagram) -> list[tuple[tuple[int, int, int], R3Variant]]:
    """All ``(x, y, z)`` triples with the variant they currently read as.

    Candidates start from two adjacent tails, which form the top block.
    """
    found = []
    for c, circle in enumerate(diagram.circles):
        size = len(circle)
        if size < 3:  # noqa: PLR2004
            continue
        for p, marker in enumerate(circle):
            following = circle[(p + 1) % size]
            if not (marker.over and following.over):
                continue
            for variant, (x, y) in (
                (R3Variant.FORWARD, (marker.chord, following.chord)),
                (R3Variant.REVERSE, (following.chord, marker.chord)),
            ):
                head_x = diagram.endpoints[x][False]
                beside = len(diagram.circles[head_x.circle])
                step = 1 if variant is R3Variant.FORWARD else -1
                neighbour = diagram.marker_at(EndpointRef(head_x.circle, (head_x.position + step) % beside))
                if not neighbour.over or neighbour.chord in (x, y):
                    continue
                triple = (x, y, neighbour.chord)
                try:
                    r3(diagram, triple, variant)
                except MovePatternMismatchError:
                    continue
                found.append((triple, variant))
    return sorted(found)


def apply_step(diagram: GaussDiagram, kind: MoveKind, params: Mapping[str, Any]) -> GaussDiagram:
    """Apply one move described by JSON-style parameters.

    Raises:
        MovePatternMismatchError: If the move does not apply.
        UnknownChordError: If a named chord does not exist.

    """
    match kind:
        case MoveKind.R1_INSERT:
            return r1_insert(
                diagram, Gap(*params["gap"]), Sign.from_symbol(params["sign"]), ArrowDirection(params["arrow"]),
            )
        case MoveKind.R1_REMOVE:
            return r1_remove(diagram, int(params["chord"]))
        case MoveKind.R2_INSERT:
            return r2_insert(
                diagram,
                Gap(*params["gap1"]),
                Gap(*params["gap2"]),
                R2Variant(params["variant"]),
                Sign.from_symbol(params.get("first_sign", "+")),
            )
        case MoveKind.R2_REMOVE:
            a, b = params["chords"]
            return r2_remove(diagram, (int(a), int(b)))
        case MoveKind.R3:
            x, y, z = params["chords"]
            return r3(diagram, (int(x), int(y), int(z)), R3Variant(params["variant"]))
        case MoveKind.K_FLYPE:
            return k_flype(diagram, int(params["chord"]))
    msg = f"unsupported move kind {kind}"
    raise ValueError(msg)


def _step(diagram: GaussDiagram, kind: MoveKind, params: dict[str, Any]) -> tuple[GaussDiagram, MoveStep]:
    result = apply_step(diagram, kind, params)
    created = tuple(sorted(set(result.chord_ids) - set(diagram.chord_ids)))
    chord_map = {k: k for k in diagram.chord_ids if k in result.sign_map}
    return result, MoveStep(kind=kind, params=params, chord_map=chord_map, created=created)


def replay(diagram: GaussDiagram, trace: MoveTrace) -> GaussDiagram:
    """Apply the steps of a trace in order."""
    for step in trace.steps:
        diagram = apply_step(diagram, step.kind, step.params)
    return diagram


def _sign_symbol(rng: random.Random) -> str:
    return rng.choice(("+", "-"))


def _r1_options(diagram: GaussDiagram, room: int) -> list[Callable[[random.Random], tuple[MoveKind, dict[str, Any]]]]:
    options = []
    if room >= 1:
        options.append(
            lambda rng: (
                MoveKind.R1_INSERT,
                {
                    "gap": list(rng.choice(diagram.gaps())),
                    "sign": _sign_symbol(rng),
                    "arrow": rng.choice(list(ArrowDirection)).value,
                },
            ),
        )
    kinks = r1_kinks(diagram)
    if kinks:
        options.append(lambda rng: (MoveKind.R1_REMOVE, {"chord": rng.choice(kinks)}))
    return options


def _r2_options(diagram: GaussDiagram, room: int) -> list[Callable[[random.Random], tuple[MoveKind, dict[str, Any]]]]:
    options = []
    if room >= 2:  # noqa: PLR2004
        options.append(
            lambda rng: (
                MoveKind.R2_INSERT,
                {
                    "gap1": list(rng.choice(diagram.gaps())),
                    "gap2": list(rng.choice(diagram.gaps())),
                    "variant": rng.choice(list(R2Variant)).value,
                    "first_sign": _sign_symbol(rng),
                },
            ),
        )
    bigons = r2_bigons(diagram)
    if bigons:
        options.append(lambda rng: (MoveKind.R2_REMOVE, {"chords": list(rng.choice(bigons))}))
    return options


def _r3_options(diagram: GaussDiagram) -> list[Callable[[random.Random], tuple[MoveKind, dict[str, Any]]]]:
    triangles = r3_triangles(diagram)
    if not triangles:
        return []

    def pick(rng: random.Random) -> tuple[MoveKind, dict[str, Any]]:
        triple, variant = rng.choice(triangles)
        return MoveKind.R3, {"chords": list(triple), "variant": variant.value}

    return [pick]


def _flype_options(diagram: GaussDiagram) -> list[Callable[[random.Random], tuple[MoveKind, dict[str, Any]]]]:
    if not diagram.chord_count:
        return []
    return [lambda rng: (MoveKind.K_FLYPE, {"chord": rng.choice(diagram.chord_ids)})]


_FAMILIES: Mapping[str, Callable[[GaussDiagram, int], list]] = {
    "r1": _r1_options,
    "r2": _r2_options,
    "r3": lambda diagram, _room: _r3_options(diagram),
    "flype": lambda diagram, _room: _flype_options(diagram),
}


def random_walk(
    diagram: GaussDiagram,
    steps: int,
    seed: int,
    *,
    allow_flype: bool = False,
    max_chords: int | None = None,
    weights: Mapping[str, int] | None = None,
) -> tuple[GaussDiagram, MoveTrace]:
    """Apply ``steps`` random legal moves with a seeded generator.

    A move family is drawn by weight; when it has no legal instance it is dropped
    for this step and another family is drawn. Insertions respect ``max_chords``.

    Args:
        diagram (GaussDiagram): Starting diagram.
        steps (int): Number of moves.
        seed (int): Generator seed.
        allow_flype (bool): Include K-flypes (the walk is then a K-equivalence).
        max_chords (int | None): Largest chord count an insertion may reach.
        weights (Mapping[str, int] | None): Weights of ``r1``, ``r2``, ``r3`` and ``flype``.

    Returns:
        tuple[GaussDiagram, MoveTrace]: The final diagram and a replayable trace.

    Raises:
        ValueError: If ``steps`` is negative.

    """
    if steps < 0:
        msg = f"steps must be nonnegative, got {steps}"
        raise ValueError(msg)
    weights = dict(weights or DEFAULT_WALK_WEIGHTS)
    if not allow_flype:
        weights.pop("flype", None)
    rng = random.Random(seed)  # noqa: S311
    trace: list[MoveStep] = []
    for _ in range(steps):
        # unbounded walks only need room for the two chords of a bigon
        room = max_chords - diagram.chord_count if max_chords is not None else 2
        pool = {name: w for name, w in weights.items() if w > 0 and name in _FAMILIES}
        while pool:
            names = sorted(pool)
            name = rng.choices(names, weights=[pool[n] for n in names])[0]
            options = _FAMILIES[name](diagram, room)
            if options:
                kind, params = rng.choice(options)(rng)
                diagram, step = _step(diagram, kind, params)
                logger.debug("walk step %d: %s %s", len(trace), kind.value, params)
                trace.append(step)
                break
            del pool[name]
    return diagram, MoveTrace(seed=seed, steps=tuple(trace))
