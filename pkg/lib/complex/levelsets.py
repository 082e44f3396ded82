"""
Connected components of PL preimages of intervals.
"""
import logging
from typing import FrozenSet, Iterable, List

from networkx.utils import UnionFind

from ..covers import Interval
from .models import Simplex, SimplicialComplex2, VertexFunction, facets

logger = logging.getLogger(__name__)

Component = FrozenSet[Simplex]


def participating_simplices(complex_: SimplicialComplex2, function: VertexFunction,
                            interval: Interval) -> List[Simplex]:
    """Simplices whose value range meets the interval, i.e. that carry part of the preimage."""
    return [s for s in complex_.simplices() if interval.meets_range(*function.span(s))]


def group_by_faces(simplices: Iterable[Simplex]) -> List[Component]:
    """Components of a set of simplices under the facet relation, in a stable order."""
    simplices = list(simplices)
    members = set(simplices)
    forest = UnionFind(simplices)
    for s in simplices:
        for face in facets(s):
            if face in members:
                forest.union(s, face)
    components = [frozenset(group) for group in forest.to_sets()]
    return sorted(components, key=lambda c: min((len(s), s) for s in c))


def levelset_components(complex_: SimplicialComplex2, function: VertexFunction,
                        interval: Interval) -> List[Component]:
    """
    Components of the PL preimage of an interval.

    A simplex takes part iff its value range meets the interval; the part of
    the preimage inside a simplex is convex, so two taking part are connected
    whenever one is a face of the other.
    """
    components = group_by_faces(participating_simplices(complex_, function, interval))
    logger.debug(f"Preimage of {interval}: {len(components)} component(s)")
    return components


def component_of(components: List[Component], simplex: Simplex) -> int:
    """Index of the component holding a simplex, or -1."""
    for k, component in enumerate(components):
        if simplex in component:
            return k
    return -1
