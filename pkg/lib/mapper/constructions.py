"""
Mapper and MultiNerve Mapper constructions.

Discrete versions work on a Rips graph with vertex or edge witnesses for the
intersections; the continuous version works on the PL function over a complex.
"""
import logging
from enum import Enum
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple, Union

from networkx.utils import UnionFind

from ..complex import (SimplicialComplex2, VertexFunction, component_of,
                       levelset_components)
from ..covers import GomicCover
from ..diagram import Variant
from ..errors import (InvalidParameters, SlabAttachmentAmbiguous,
                      UncoveredValue)
from ..reeb import LeveledMultigraph
from .models import RipsGraph

logger = logging.getLogger(__name__)


class Connectivity(Enum):
    """Witnesses used to connect components over an intersection."""
    VERTEX = "vertex"
    EDGE = "edge"


def check_covered(values: Iterable[float], cover: GomicCover):
    """Raise UncoveredValue for the first value outside every open cover interval."""
    for k, value in enumerate(values):
        if not cover.covers(value):
            raise UncoveredValue(f"Value {value:g} of vertex {k} is not covered by {cover.to_list()}")


def _components(items: Sequence[Hashable], pairs: Iterable[Tuple[Hashable, Hashable]]) -> List[frozenset]:
    forest = UnionFind(items)
    for a, b in pairs:
        forest.union(a, b)
    order = {item: k for k, item in enumerate(items)}
    return sorted((frozenset(group) for group in forest.to_sets()),
                  key=lambda group: min(order[item] for item in group))


def pi1_project(graph: LeveledMultigraph) -> LeveledMultigraph:
    """Collapse every bundle of parallel edges to one edge."""
    return graph.simple()


def _finish(levels: List[float], edges: List[Tuple[int, int]], variant: Variant) -> LeveledMultigraph:
    graph = LeveledMultigraph(tuple(levels), tuple(edges))
    return pi1_project(graph) if variant is Variant.MAPPER else graph


def mapper_discrete(graph: RipsGraph, values: Sequence[float], cover: GomicCover,
                    connectivity: Union[Connectivity, str] = Connectivity.EDGE,
                    variant: Union[Variant, str] = Variant.MULTINERVE) -> LeveledMultigraph:
    """
    Mapper of a sampled function on a Rips graph.

    Nodes are the components of the subgraphs induced on each interval
    preimage. With vertex witnesses, edges are the components induced on each
    intersection preimage; with edge witnesses that preimage is enriched with
    the edges having one endpoint in each interval preimage, and components
    attach through the endpoints in their closure.

    Raises:
        UncoveredValue: If a point value lies outside the cover
        SlabAttachmentAmbiguous: If an intersection component meets several nodes on one side
    """
    connectivity, variant = Connectivity(connectivity), Variant(variant)
    values = [float(v) for v in values]
    if len(values) != graph.n_vertices:
        raise InvalidParameters(f"{len(values)} values for {graph.n_vertices} vertices")
    check_covered(values, cover)

    members = [[p for p, value in enumerate(values) if interval.contains(value)] for interval in cover]

    levels: List[float] = []
    owner: List[Dict[int, int]] = []
    for k, interval in enumerate(cover):
        inside = set(members[k])
        components = _components(members[k], [(u, v) for u, v in graph.edges
                                               if u in inside and v in inside])
        node_of = {}
        for component in components:
            for p in component:
                node_of[p] = len(levels)
            levels.append(interval.midpoint)
        owner.append(node_of)

    edges: List[Tuple[int, int]] = []
    for k in range(len(cover) - 1):
        lower, upper = set(members[k]), set(members[k + 1])
        shared = lower & upper
        items: List[Hashable] = sorted(shared)
        pairs = [(u, v) for u, v in graph.edges if u in shared and v in shared]
        if connectivity is Connectivity.EDGE:
            for u, v in graph.edges:
                if (u in lower and v in upper) or (v in lower and u in upper):
                    items.append(("edge", u, v))
                    pairs.extend((("edge", u, v), w) for w in (u, v) if w in shared)

        for component in _components(items, pairs):
            closure = set()
            for item in component:
                closure.update(item[1:] if isinstance(item, tuple) else (item,))
            below = {owner[k][p] for p in closure if p in lower}
            above = {owner[k + 1][p] for p in closure if p in upper}
            if len(below) != 1 or len(above) != 1:
                raise SlabAttachmentAmbiguous(
                    f"Intersection component {k} meets {len(below)} lower and {len(above)} upper node(s)")
            edges.append((below.pop(), above.pop()))

    result = _finish(levels, edges, variant)
    logger.debug(f"{variant.value}/{connectivity.value} Mapper: {result.summary()}")
    return result


def mapper_continuous(complex_: SimplicialComplex2, function: VertexFunction, cover: GomicCover,
                      variant: Union[Variant, str] = Variant.MULTINERVE) -> LeveledMultigraph:
    """
    Mapper of the PL function on a complex: nodes are preimage components of
    the intervals, edges are preimage components of the intersections.

    Raises:
        UncoveredValue: If a vertex value lies outside the cover
    """
    variant = Variant(variant)
    check_covered(function.values, cover)

    levels: List[float] = []
    per_interval = []
    offsets = []
    for interval in cover:
        components = levelset_components(complex_, function, interval)
        offsets.append(len(levels))
        per_interval.append(components)
        levels.extend([interval.midpoint] * len(components))

    edges: List[Tuple[int, int]] = []
    for k in range(len(cover) - 1):
        for piece in levelset_components(complex_, function, cover.intersection(k)):
            witness = next(iter(piece))
            edges.append((offsets[k] + component_of(per_interval[k], witness),
                          offsets[k + 1] + component_of(per_interval[k + 1], witness)))

    result = _finish(levels, edges, variant)
    logger.debug(f"continuous {variant.value}: {result.summary()}")
    return result
