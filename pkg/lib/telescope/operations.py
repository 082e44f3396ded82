"""
Merge, Split and Shift operations on combinatorial telescopes, and fork classification.
"""
import logging
import math
from typing import Dict, List, Set, Tuple

from networkx.utils import UnionFind

from ..errors import InvalidEpsilon, InvalidParameters, OutOfRange
from .models import CombinatorialTelescope, Cylinder, replace_value

logger = logging.getLogger(__name__)

UP_FORK = "up_fork"
DOWN_FORK = "down_fork"

Element = Tuple[str, int, str]


def _collapse(telescope: CombinatorialTelescope, lo: int, hi: int) -> Tuple[List[str], Dict[str, str], Dict[str, str]]:
    """
    Components of slices lo..hi glued along the cylinders between them.

    Returns the new labels and, for slices lo and hi, the map from old
    labels to new ones.
    """
    elements: List[Element] = [("x", i, x) for i in range(lo, hi + 1) for x in telescope.slices[i]]
    elements.extend(("y", j, y) for j in range(lo, hi) for y in telescope.cylinders[j].labels)
    forest = UnionFind(elements)
    for j in range(lo, hi):
        cylinder = telescope.cylinders[j]
        for y in cylinder.labels:
            forest.union(("y", j, y), ("x", j, cylinder.lower[y]))
            forest.union(("y", j, y), ("x", j + 1, cylinder.upper[y]))

    # Deterministic naming: components ordered by their first element in slice order
    order = {element: k for k, element in enumerate(elements)}
    groups = sorted((sorted(group, key=order.get) for group in forest.to_sets()),
                    key=lambda g: order[g[0]])
    name = {}
    labels = []
    for k, group in enumerate(groups):
        labels.append(f"c{k}")
        for element in group:
            name[element] = f"c{k}"
    bottom = {x: name[("x", lo, x)] for x in telescope.slices[lo]}
    top = {x: name[("x", hi, x)] for x in telescope.slices[hi]}
    return labels, bottom, top


def merge_op(telescope: CombinatorialTelescope, a: float, b: float) -> CombinatorialTelescope:
    """
    Collapse the part of the telescope over [a, b] onto the level (a + b) / 2.

    With no critical value in [a, b] a regular slice is inserted inside the
    cylinder that crosses it.

    Raises:
        InvalidParameters: If a > b
        OutOfRange: If [a, b] leaves the support
    """
    if a > b:
        raise InvalidParameters(f"Merge needs a <= b, got [{a}, {b}]")
    first, last = telescope.support()
    if a < first or b > last:
        raise OutOfRange(f"[{a:g}, {b:g}] leaves the support [{first:g}, {last:g}]")

    middle = (a + b) / 2
    inside = [i for i, value in enumerate(telescope.crit) if a <= value <= b]
    crit = telescope.crit
    slices = list(telescope.slices)
    cylinders = list(telescope.cylinders)

    if not inside:
        j = max(i for i, value in enumerate(crit) if value < a)
        crossing = cylinders[j]
        below = Cylinder(crossing.labels, crossing.lower, {y: y for y in crossing.labels})
        above = Cylinder(crossing.labels, {y: y for y in crossing.labels}, crossing.upper)
        result = CombinatorialTelescope(
            crit[:j + 1] + (middle,) + crit[j + 1:],
            tuple(slices[:j + 1]) + (crossing.labels,) + tuple(slices[j + 1:]),
            tuple(cylinders[:j]) + (below, above) + tuple(cylinders[j + 1:]))
        logger.debug(f"Merge over [{a:g}, {b:g}] inserted a regular slice at {middle:g}")
        return result

    lo, hi = inside[0], inside[-1]
    labels, bottom, top = _collapse(telescope, lo, hi)

    new_cylinders = list(cylinders[:max(lo - 1, 0)])
    if lo > 0:
        entering = cylinders[lo - 1]
        new_cylinders.append(Cylinder(entering.labels, entering.lower,
                                      {y: bottom[entering.upper[y]] for y in entering.labels}))
    if hi < telescope.n - 1:
        leaving = cylinders[hi]
        new_cylinders.append(Cylinder(leaving.labels,
                                      {y: top[leaving.lower[y]] for y in leaving.labels},
                                      leaving.upper))
    new_cylinders.extend(cylinders[hi + 1:])

    result = CombinatorialTelescope(
        crit[:lo] + (middle,) + crit[hi + 1:],
        tuple(slices[:lo]) + (tuple(labels),) + tuple(slices[hi + 1:]),
        tuple(new_cylinders))
    logger.debug(f"Merge over [{a:g}, {b:g}] collapsed {hi - lo + 1} critical value(s) "
                 f"into {len(labels)} component(s)")
    return result


def _gaps(telescope: CombinatorialTelescope, i: int) -> Tuple[float, float]:
    below, above = telescope.neighbors(i)
    value = telescope.crit[i]
    return (value - below if below is not None else math.inf,
            above - value if above is not None else math.inf)


def split_op(telescope: CombinatorialTelescope, a_i: float, eps: float) -> CombinatorialTelescope:
    """
    Replace slice a_i by two copies at a_i - eps and a_i + eps joined by an identity cylinder.

    Raises:
        OutOfRange: If a_i is not a critical value
        InvalidEpsilon: Unless 0 < eps < both gaps to the neighboring critical values
    """
    i = telescope.index_of(a_i)
    gap_below, gap_above = _gaps(telescope, i)
    if not 0 < eps < min(gap_below, gap_above):
        raise InvalidEpsilon(
            f"Split at {a_i:g} needs 0 < eps < {min(gap_below, gap_above):g}, got {eps}")

    labels = telescope.slices[i]
    return CombinatorialTelescope(
        replace_value(telescope.crit, i, [a_i - eps, a_i + eps]),
        telescope.slices[:i + 1] + (labels,) + telescope.slices[i + 1:],
        telescope.cylinders[:i] + (Cylinder.identity(labels),) + telescope.cylinders[i:])


def shift_op(telescope: CombinatorialTelescope, a_i: float, eps: float) -> CombinatorialTelescope:
    """
    Move critical value a_i to a_i + eps, keeping slices, cylinders and maps.

    The moved value must stay strictly between its neighbors.

    Raises:
        OutOfRange: If a_i is not a critical value
        InvalidEpsilon: If the shift reaches or passes a neighbor
    """
    i = telescope.index_of(a_i)
    gap_below, gap_above = _gaps(telescope, i)
    if not -gap_below < eps < gap_above:
        raise InvalidEpsilon(
            f"Shift of {a_i:g} by {eps:g} must stay inside ({a_i - gap_below:g}, {a_i + gap_above:g})")
    if eps == 0:
        return telescope
    return CombinatorialTelescope(
        replace_value(telescope.crit, i, [a_i + eps]),
        telescope.slices, telescope.cylinders)


def _bijective(mapping: Dict[str, str], domain: Tuple[str, ...], codomain: Tuple[str, ...]) -> bool:
    return len(domain) == len(codomain) and {mapping[y] for y in domain} == set(codomain)


def fork_classify(telescope: CombinatorialTelescope, a_i: float) -> Set[str]:
    """
    Up-fork when the upper map of the cylinder below is a bijection onto the
    slice; down-fork when the lower map of the cylinder above is. A missing
    cylinder counts as empty.
    """
    i = telescope.index_of(a_i)
    labels = telescope.slices[i]
    kinds: Set[str] = set()

    below = telescope.cylinder_below(i)
    below_labels = below.labels if below else ()
    if _bijective(below.upper if below else {}, below_labels, labels):
        kinds.add(UP_FORK)

    above = telescope.cylinder_above(i)
    above_labels = above.labels if above else ()
    if _bijective(above.lower if above else {}, above_labels, labels):
        kinds.add(DOWN_FORK)
    return kinds
