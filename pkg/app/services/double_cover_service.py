"""The cut-system double covering phi(D, P) on Gauss diagrams.

The cover is spliced together from the diagram and its mirror-switch D*. Both
are cut at the cut points; the arc of D arriving at a point continues along the
arc of D* that leaves the partner point, and vice versa.
"""

from fractions import Fraction

from app.exceptions.cut_system_exception import InvalidCutSystemError
from app.exceptions.diagram_exception import ComponentCountError, NotAKnotError
from app.exceptions.invariant_exception import NonIntegralLinkingNumberError
from app.models.cover_model import ArcLabel, ChordProvenance, CoverResult, CoverSource
from app.models.cut_system_model import CutSystem
from app.models.gauss_diagram_model import Gap, GaussDiagram, Marker
from app.services.cut_system_service import is_cut_system
from app.services.diagram_service import mirror_switch
from app.utils.logger_util import get_logger

logger = get_logger("cover")


def _cut_arcs(circle: tuple[Marker, ...], cut_counts: list[int]) -> list[list[Marker]]:
    """Markers of the arcs ``A_1..A_k`` between consecutive cut points of one circle.

    ``cut_counts[g]`` is the count of gap ``g``. The returned list is 0-based, so
    entry ``i - 1`` holds arc ``A_i``; the last arc wraps past position 0.
    """
    k = sum(cut_counts)
    arcs: list[list[Marker]] = [[] for _ in range(k)]
    leading: list[Marker] = []
    current = -1
    for g, n in enumerate(cut_counts):
        if g < len(circle):
            (leading if current < 0 else arcs[current]).append(circle[g])
        current += n
    arcs[k - 1].extend(leading)
    return arcs


def double_cover(diagram: GaussDiagram, cuts: CutSystem) -> CoverResult:
    """Build the converted normal diagram phi(D, P).

    Chord ``i`` (0-based in id order) of D becomes cover chord ``i + 1``; its copy
    in D* becomes ``n + i + 1``. Cover circles are traced from the lowest unused arc
    label; circles without cut points are copied once from each side.

    Args:
        diagram (GaussDiagram): A valid diagram.
        cuts (CutSystem): A cut system of ``diagram``.

    Returns:
        CoverResult: The cover with chord provenance and the arc labels of every cover circle.

    Raises:
        InvalidCutSystemError: If ``cuts`` is not a cut system of ``diagram``.

    """
    if not is_cut_system(diagram, cuts):
        raise InvalidCutSystemError
    starred, _ = mirror_switch(diagram, cuts)
    n = diagram.chord_count
    base_ids = {chord_id: i + 1 for i, chord_id in enumerate(diagram.chord_ids)}
    provenance = {new: ChordProvenance(CoverSource.BASE, old) for old, new in base_ids.items()}
    provenance |= {new + n: ChordProvenance(CoverSource.STAR, old) for old, new in base_ids.items()}
    signs = {new: diagram.sign_of(old) for old, new in base_ids.items()}
    signs |= {new + n: diagram.sign_of(old) for old, new in base_ids.items()}

    def relabel(markers: list[Marker] | tuple[Marker, ...], *, star: bool) -> list[Marker]:
        return [Marker(base_ids[m.chord] + (n if star else 0), m.over) for m in markers]

    contents: dict[ArcLabel, list[Marker]] = {}
    successor: dict[ArcLabel, ArcLabel] = {}
    for c, circle in enumerate(diagram.circles):
        counts = [cuts.count(Gap(c, g)) for g in range(diagram.gap_count(c))]
        k = sum(counts)
        if k == 0:
            for star, source in ((False, diagram), (True, starred)):
                label = ArcLabel(c, 0, star)
                contents[label] = relabel(source.circles[c], star=star)
                successor[label] = label
            continue
        for star, source in ((False, diagram), (True, starred)):
            for i, markers in enumerate(_cut_arcs(source.circles[c], counts), start=1):
                label = ArcLabel(c, i, star)
                contents[label] = relabel(markers, star=star)
                # the arc arriving at p_{i+1} continues on the other sheet
                successor[label] = ArcLabel(c, i % k + 1, not star)

    circles: list[list[Marker]] = []
    arc_map: list[tuple[ArcLabel, ...]] = []
    visited: set[ArcLabel] = set()
    for start in sorted(contents):
        if start in visited:
            continue
        chain: list[ArcLabel] = []
        label = start
        while label not in visited:
            visited.add(label)
            chain.append(label)
            label = successor[label]
        circles.append([m for label in chain for m in contents[label]])
        arc_map.append(tuple(chain))

    logger.debug("cover of %d chords with %d cut points has %d circles", n, cuts.total, len(circles))
    return CoverResult(
        diagram=GaussDiagram(circles=circles, signs=signs),
        provenance=provenance,
        arc_map=tuple(arc_map),
    )


def component_count(cover: CoverResult) -> int:
    """Number of circles of the cover."""
    return cover.diagram.circle_count


def check_arc_alternation(cover: CoverResult) -> bool:
    """Check that consecutive arcs, and each arc and its partner, sit in different cover circles.

    Only circles of the original diagram with an even, nonzero number of cut points
    are checked. With an odd number all arcs of the circle and of its partner run
    into one cover circle, which only happens on links.
    """
    cut_sizes: dict[int, int] = {}
    for labels in cover.arc_map:
        for label in labels:
            cut_sizes[label.circle] = max(cut_sizes.get(label.circle, 0), label.index)
    for circle, k in cut_sizes.items():
        if k == 0 or k % 2:
            continue
        for i in range(1, k + 1):
            where = cover.component_of(ArcLabel(circle, i, star=False))
            if where in (
                cover.component_of(ArcLabel(circle, i % k + 1, star=False)),
                cover.component_of(ArcLabel(circle, i, star=True)),
            ):
                return False
    return True


def linking_number(diagram: GaussDiagram) -> Fraction:
    """Half the sum of the signs of the chords joining the two circles.

    Raises:
        ComponentCountError: If the diagram does not have exactly two circles.

    """
    if diagram.circle_count != 2:  # noqa: PLR2004
        raise ComponentCountError(2, diagram.circle_count)
    return Fraction(sum(int(chord.sign) for chord in diagram.chords if not chord.is_self), 2)


def lk_n(diagram: GaussDiagram, cuts: CutSystem) -> int:
    """Linking number of the double cover of a knot diagram.

    Args:
        diagram (GaussDiagram): A knot diagram.
        cuts (CutSystem): A cut system of ``diagram``.

    Returns:
        int: ``lk_N``; it equals the odd writhe of the diagram.

    Raises:
        NotAKnotError: If the diagram has more than one circle.
        InvalidCutSystemError: If ``cuts`` is not a cut system.
        NonIntegralLinkingNumberError: If the cover's linking number is a half-integer.

    """
    if not diagram.is_knot:
        raise NotAKnotError(diagram.circle_count)
    value = linking_number(double_cover(diagram, cuts).diagram)
    if value.denominator != 1:
        raise NonIntegralLinkingNumberError(value)
    return int(value)


def is_amphicheiral_obstructed(diagram: GaussDiagram, cuts: CutSystem) -> bool:
    """True when ``lk_N`` is nonzero.

    The knot is then not normal, and it is neither equivalent to its switch nor
    to its mirror image, since both have ``lk_N`` of the opposite sign.
    """
    return lk_n(diagram, cuts) != 0
