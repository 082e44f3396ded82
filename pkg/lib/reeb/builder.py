"""
Reeb graph construction by a sweep over vertex values.
Nodes are level-set components at vertex values; edges are slab components witnessed at slab midpoints.
"""
import logging
from typing import Dict, List, Tuple

from ..complex import (Component, SimplicialComplex2, VertexFunction,
                       levelset_components)
from ..covers import Interval
from ..errors import InvalidParameters, NonGenericValues, SlabAttachmentAmbiguous
from .models import LeveledMultigraph

logger = logging.getLogger(__name__)


def _attach(slab: Component, nodes: List[Component], offset: int, side: str) -> int:
    """Node index of the unique level component containing a slab component."""
    owners = {k for k, node in enumerate(nodes) for s in slab if s in node}
    if len(owners) != 1:
        raise SlabAttachmentAmbiguous(
            f"Slab component meets {len(owners)} {side} level component(s)")
    return offset + owners.pop()


def reeb_graph(complex_: SimplicialComplex2, function: VertexFunction,
               perturb: bool = False) -> LeveledMultigraph:
    """
    Combinatorial Reeb graph of the PL extension of f.

    Every vertex value is treated as a critical candidate, so regular values
    show up as degree-2 nodes.

    Raises:
        NonGenericValues: On tied values without perturbation
        SlabAttachmentAmbiguous: If a slab component touches several level components on one side
    """
    if len(function) != complex_.n_vertices:
        raise InvalidParameters(
            f"Function has {len(function)} values for {complex_.n_vertices} vertices")
    if not perturb and not function.is_generic():
        raise NonGenericValues("Reeb graph sweep needs pairwise distinct vertex values")

    values = sorted(set(function.values))
    levels: List[float] = []
    offsets: Dict[float, int] = {}
    level_components: Dict[float, List[Component]] = {}

    for value in values:
        components = levelset_components(complex_, function, Interval.closed(value, value))
        offsets[value] = len(levels)
        level_components[value] = components
        levels.extend([value] * len(components))

    edges: List[Tuple[int, int]] = []
    for lower, upper in zip(values, values[1:]):
        middle = (lower + upper) / 2
        for slab in levelset_components(complex_, function, Interval.closed(middle, middle)):
            u = _attach(slab, level_components[lower], offsets[lower], "lower")
            v = _attach(slab, level_components[upper], offsets[upper], "upper")
            edges.append((u, v))

    graph = LeveledMultigraph(tuple(levels), tuple(edges))
    logger.debug(f"Reeb graph: {graph.summary()}")
    return graph
