"""
Extended persistence of the level function on a leveled multigraph.
"""
import logging
from typing import List, Tuple

from ..complex import SimplicialComplex2, VertexFunction, extended_persistence
from ..diagram import ExtendedDiagram
from .models import LeveledMultigraph

logger = logging.getLogger(__name__)


def subdivide_parallel_edges(graph: LeveledMultigraph) -> Tuple[SimplicialComplex2, VertexFunction]:
    """
    Turn a multigraph into a simplicial 1-complex.

    Every copy of an edge with multiplicity above one is split at the midpoint
    of its end levels; simple edges are kept.
    """
    values: List[float] = list(graph.levels)
    edges: List[Tuple[int, int]] = []
    for (u, v), multiplicity in sorted(graph.edge_counts().items()):
        if multiplicity == 1:
            edges.append((u, v))
            continue
        middle = (graph.levels[u] + graph.levels[v]) / 2
        for _ in range(multiplicity):
            w = len(values)
            values.append(middle)
            edges.extend([(u, w), (w, v)])
    return SimplicialComplex2(len(values), tuple(edges)), VertexFunction(tuple(values))


def quotient_diagram(graph: LeveledMultigraph) -> ExtendedDiagram:
    """Diagram of the quotient map: only Ord_0, Ext+_0, Ext-_1 and Rel_1 can occur."""
    complex_, function = subdivide_parallel_edges(graph)
    diagram = extended_persistence(complex_, function, perturb=True)
    logger.debug(f"Quotient diagram of {graph.summary()}: {diagram}")
    return diagram
