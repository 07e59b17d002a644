"""Seeded random diagrams for the verification suites and the property tests."""

import random

from app.models.gauss_diagram_model import GaussDiagram, Marker, Sign
from app.models.pd_diagram_model import ClassicalCrossing, PDDiagram, VirtualCrossing
from app.services.pd_code_service import trace_pd

MAX_ATTEMPTS = 200


def random_gauss_diagram(rng: random.Random, chords: int, circles: int = 1) -> GaussDiagram:
    """Shuffle the ``2 * chords`` endpoints and deal them onto ``circles`` circles.

    Any such diagram is a valid virtual link diagram; circles may stay empty.
    """
    markers = [Marker(k, over) for k in range(1, chords + 1) for over in (True, False)]
    rng.shuffle(markers)
    cuts = sorted(rng.randint(0, len(markers)) for _ in range(circles - 1))
    bounds = [0, *cuts, len(markers)]
    return GaussDiagram(
        circles=[markers[bounds[i] : bounds[i + 1]] for i in range(circles)],
        signs={k: rng.choice((Sign.POSITIVE, Sign.NEGATIVE)) for k in range(1, chords + 1)},
    )


def random_knot(rng: random.Random, max_chords: int, min_chords: int = 0) -> GaussDiagram:
    """A one-circle diagram with a random number of chords in ``[min_chords, max_chords]``."""
    return random_gauss_diagram(rng, rng.randint(min_chords, max_chords))


def braid_closure(strands: int, word: list[tuple[str, int, int]]) -> PDDiagram | None:
    """PD code of the closure of a virtual braid word.

    Letters are ``("s", i, +1)`` and ``("s", i, -1)`` for classical generators and
    ``("v", i, 0)`` for virtual ones, acting on positions ``i`` and ``i + 1``.
    The strand coming from the left passes over in ``s_i`` and under in its inverse;
    the first crossing is positive, the second negative. Strands that meet no
    crossing are dropped.

    Returns:
        PDDiagram | None: The closure, or None for a word without letters.

    """
    if not word:
        return None
    top = list(range(1, strands + 1))
    current = list(top)
    next_edge = strands + 1
    classical: list[ClassicalCrossing] = []
    virtual: list[VirtualCrossing] = []
    for kind, i, exponent in word:
        left, right = current[i], current[i + 1]
        to_left, to_right = next_edge, next_edge + 1
        next_edge += 2
        if kind == "v":
            virtual.append(VirtualCrossing(a=left, b=right, c=to_right, d=to_left))
        elif exponent > 0:
            classical.append(ClassicalCrossing(Sign.POSITIVE, a=right, b=left, c=to_left, d=to_right))
        else:
            classical.append(ClassicalCrossing(Sign.NEGATIVE, a=left, b=right, c=to_right, d=to_left))
        current[i], current[i + 1] = to_left, to_right

    closing = {end: start for start, end in zip(top, current, strict=True) if start != end}
    used = sorted({closing.get(e, e) for x in (*classical, *virtual) for e in (x.a, x.b, x.c, x.d)})
    renumber = {e: n for n, e in enumerate(used, start=1)}

    def edge(e: int) -> int:
        return renumber[closing.get(e, e)]

    return PDDiagram(
        classical=tuple(ClassicalCrossing(x.sign, edge(x.a), edge(x.b), edge(x.c), edge(x.d)) for x in classical),
        virtual=tuple(VirtualCrossing(edge(v.a), edge(v.b), edge(v.c), edge(v.d)) for v in virtual),
    )


def random_pd(
    rng: random.Random,
    max_classical: int,
    max_virtual: int,
    *,
    knot: bool = False,
    max_strands: int = 3,
) -> PDDiagram:
    """A random virtual braid closure, so that the diagram is planar.

    Args:
        rng (random.Random): Seeded generator.
        max_classical (int): Largest number of classical crossings.
        max_virtual (int): Largest number of virtual crossings.
        knot (bool): Retry until the closure has a single component.
        max_strands (int): Largest braid width.

    Returns:
        PDDiagram: A valid PD diagram with at least one crossing.

    Raises:
        ValueError: If no acceptable closure was drawn within the attempt budget.

    """
    for _ in range(MAX_ATTEMPTS):
        strands = rng.randint(2, max(2, max_strands))
        letters = ["s"] * rng.randint(0, max_classical) + ["v"] * rng.randint(0, max_virtual)
        rng.shuffle(letters)
        word = [
            (kind, rng.randrange(strands - 1), rng.choice((1, -1)) if kind == "s" else 0) for kind in letters
        ]
        pd = braid_closure(strands, word)
        if pd is None:
            continue
        if knot and trace_pd(pd).diagram.circle_count != 1:
            continue
        return pd
    msg = f"no suitable braid closure in {MAX_ATTEMPTS} attempts"
    raise ValueError(msg)
