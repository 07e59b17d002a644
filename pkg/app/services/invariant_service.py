"""Odd writhe, writhe, Kauffman bracket and f-polynomial of Gauss diagrams."""

from collections import Counter
from itertools import product

from networkx.utils import UnionFind

from app.exceptions.diagram_exception import NotAKnotError
from app.exceptions.invariant_exception import StateLimitExceededError
from app.models.gauss_diagram_model import EndpointRef, GaussDiagram, Sign
from app.models.laurent_polynomial_model import A, LOOP_VALUE, LaurentPolynomial
from app.utils.logger_util import get_logger

logger = get_logger("invariants")

DEFAULT_STATE_LIMIT = 20


def _require_knot(diagram: GaussDiagram) -> None:
    if not diagram.is_knot:
        raise NotAKnotError(diagram.circle_count)


def odd_chords(diagram: GaussDiagram) -> frozenset[int]:
    """Chords with an odd number of endpoints strictly inside their tail-to-head arc.

    Raises:
        NotAKnotError: If the diagram has more than one circle.

    """
    _require_knot(diagram)
    size = len(diagram.circles[0])
    return frozenset(
        chord.id
        for chord in diagram.chords
        if ((chord.head.position - chord.tail.position) % size - 1) % 2
    )


def odd_writhe(diagram: GaussDiagram) -> int:
    """Sum of the signs of the odd chords of a knot diagram."""
    return sum(int(diagram.sign_of(c)) for c in odd_chords(diagram))


def writhe(diagram: GaussDiagram) -> int:
    """Sum of all chord signs."""
    return sum(int(sign) for _, sign in diagram.signs)


def _arc_in(diagram: GaussDiagram, ref: EndpointRef) -> EndpointRef:
    """The arc entering a marker, named by the marker it starts at."""
    return EndpointRef(ref.circle, (ref.position - 1) % len(diagram.circles[ref.circle]))


def _smoothing_pairs(diagram: GaussDiagram) -> list[tuple[tuple, tuple]]:
    """Per chord, the arc unions of its A-smoothing and of its B-smoothing."""
    pairs = []
    for chord in diagram.chords:
        x, y = chord.tail, chord.head
        oriented = ((_arc_in(diagram, x), y), (_arc_in(diagram, y), x))
        unoriented = ((_arc_in(diagram, x), _arc_in(diagram, y)), (x, y))
        # positive kink evaluates to -A^3 when its A-smoothing follows the orientation
        pairs.append((oriented, unoriented) if chord.sign is Sign.POSITIVE else (unoriented, oriented))
    return pairs


def state_loop_counts(diagram: GaussDiagram) -> Counter[tuple[int, int]]:
    """Histogram of ``(a - b, loops)`` over all smoothing states.

    Arcs of the diagram are the nodes; each smoothing glues arc ends together and
    the loops are the union-find classes, plus one per empty circle.
    """
    arcs = [EndpointRef(c, p) for c, circle in enumerate(diagram.circles) for p in range(len(circle))]
    empty = sum(1 for circle in diagram.circles if not circle)
    pairs = _smoothing_pairs(diagram)
    histogram: Counter[tuple[int, int]] = Counter()
    for state in product((True, False), repeat=len(pairs)):
        classes = UnionFind(arcs)
        for use_a, (a_smoothing, b_smoothing) in zip(state, pairs, strict=True):
            for first, second in a_smoothing if use_a else b_smoothing:
                classes.union(first, second)
        loops = sum(1 for _ in classes.to_sets()) + empty
        a_count = sum(state)
        histogram[(2 * a_count - len(pairs), loops)] += 1
    return histogram


def kauffman_bracket(diagram: GaussDiagram, state_limit: int = DEFAULT_STATE_LIMIT) -> LaurentPolynomial:
    """Kauffman bracket, normalized so that the unknot evaluates to 1.

    Args:
        diagram (GaussDiagram): Any valid diagram.
        state_limit (int): Largest chord count for which the 2^n state sum is run.

    Returns:
        LaurentPolynomial: The sum of ``A^(a-b) d^(loops-1)`` with ``d = -A^2 - A^-2``.

    Raises:
        StateLimitExceededError: If the diagram has more than ``state_limit`` chords.

    """
    if diagram.chord_count > state_limit:
        raise StateLimitExceededError(diagram.chord_count, state_limit)
    logger.debug("bracket state sum over %d states", 2**diagram.chord_count)
    total = LaurentPolynomial.zero()
    loop_powers: dict[int, LaurentPolynomial] = {}
    for (exponent, loops), count in sorted(state_loop_counts(diagram).items()):
        if loops not in loop_powers:
            loop_powers[loops] = LOOP_VALUE ** (loops - 1)
        total += count * A**exponent * loop_powers[loops]
    return total


def f_polynomial(diagram: GaussDiagram, state_limit: int = DEFAULT_STATE_LIMIT) -> LaurentPolynomial:
    """Writhe-normalized bracket ``(-A^3)^(-writhe) <D>``.

    Raises:
        StateLimitExceededError: If the diagram has more than ``state_limit`` chords.

    """
    return (-(A**3)) ** (-writhe(diagram)) * kauffman_bracket(diagram, state_limit)
