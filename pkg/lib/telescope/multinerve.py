"""
MultiNerve Mapper and Mapper of a telescope's height function.
"""
import logging
from typing import Dict, List, Tuple, Union

from networkx.utils import UnionFind

from ..covers import GomicCover, Interval
from ..diagram import Variant
from ..errors import SlabAttachmentAmbiguous
from ..reeb import LeveledMultigraph
from .canonical import check_endpoints
from .models import CombinatorialTelescope

logger = logging.getLogger(__name__)

Element = Tuple[str, int, str]


def preimage_components(telescope: CombinatorialTelescope, interval: Interval) -> List[frozenset]:
    """
    Components of the part of the telescope over an open interval.

    A slice takes part when its value lies in the interval, a cylinder
    component when its open span meets it; a cylinder component is glued
    to the slice at each end whose value lies in the interval.
    """
    crit = telescope.crit
    elements: List[Element] = []
    for i, labels in enumerate(telescope.slices):
        if interval.contains(crit[i]):
            elements.extend(("x", i, x) for x in labels)
    for j, cylinder in enumerate(telescope.cylinders):
        if crit[j] < interval.hi and crit[j + 1] > interval.lo:
            elements.extend(("y", j, y) for y in cylinder.labels)

    forest = UnionFind(elements)
    for kind, j, y in elements:
        if kind != "y":
            continue
        cylinder = telescope.cylinders[j]
        if interval.contains(crit[j]):
            forest.union(("y", j, y), ("x", j, cylinder.lower[y]))
        if interval.contains(crit[j + 1]):
            forest.union(("y", j, y), ("x", j + 1, cylinder.upper[y]))

    order = {element: k for k, element in enumerate(elements)}
    return sorted((frozenset(group) for group in forest.to_sets()),
                  key=lambda group: min(order[e] for e in group))


def _owner(piece: frozenset, components: List[frozenset], offset: int) -> int:
    owners = {k for k, component in enumerate(components) if piece & component}
    if len(owners) != 1:
        raise SlabAttachmentAmbiguous(
            f"Intersection component meets {len(owners)} interval component(s)")
    return offset + owners.pop()


def multinerve_of_telescope(telescope: CombinatorialTelescope, cover: GomicCover,
                            variant: Union[Variant, str] = Variant.MULTINERVE) -> LeveledMultigraph:
    """
    Nodes are the components over each cover interval, placed at the interval
    midpoint; edges are the components over each intersection. The Mapper
    variant keeps one edge per adjacent pair.

    Raises:
        EndpointCollision: If a critical value is a cover endpoint
    """
    variant = Variant(variant)
    check_endpoints(telescope, cover)

    levels: List[float] = []
    offsets: Dict[int, int] = {}
    per_interval: List[List[frozenset]] = []
    for k, interval in enumerate(cover):
        components = preimage_components(telescope, interval)
        offsets[k] = len(levels)
        per_interval.append(components)
        levels.extend([interval.midpoint] * len(components))

    edges = []
    for k in range(len(cover) - 1):
        for piece in preimage_components(telescope, cover.intersection(k)):
            edges.append((_owner(piece, per_interval[k], offsets[k]),
                          _owner(piece, per_interval[k + 1], offsets[k + 1])))

    graph = LeveledMultigraph(tuple(levels), tuple(edges))
    if variant is Variant.MAPPER:
        graph = graph.simple()
    logger.debug(f"{variant.value} of {telescope.summary()}: {graph.summary()}")
    return graph
