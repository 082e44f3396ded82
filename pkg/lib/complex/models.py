"""
Simplicial complex and vertex function data models.
Complexes have dimension at most two; vertices are numbered 0..n-1.
"""
import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import InvalidParameters, NonGenericValues

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


def facets(simplex: Simplex) -> List[Simplex]:
    """Codimension-one faces of a sorted simplex."""
    if len(simplex) == 1:
        return []
    return [simplex[:j] + simplex[j + 1:] for j in range(len(simplex))]


@dataclass(frozen=True)
class SimplicialComplex2:
    """Face-closed complex of dimension <= 2 on vertices 0..n_vertices-1."""
    n_vertices: int
    edges: Tuple[Simplex, ...] = ()
    triangles: Tuple[Simplex, ...] = ()

    def __post_init__(self):
        if self.n_vertices < 0:
            raise InvalidParameters("Vertex count must be non-negative")
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        triangles = tuple(sorted(tuple(sorted(t)) for t in self.triangles))

        for group, size in ((edges, 2), (triangles, 3)):
            if len(set(group)) != len(group):
                raise InvalidParameters(f"Duplicate {size - 1}-simplices in complex")
            for s in group:
                if len(s) != size or len(set(s)) != size:
                    raise InvalidParameters(f"Malformed simplex {s}")
                if any(v < 0 or v >= self.n_vertices for v in s):
                    raise InvalidParameters(f"Simplex {s} uses an unknown vertex")

        edge_set = set(edges)
        for t in triangles:
            missing = [e for e in facets(t) if e not in edge_set]
            if missing:
                raise InvalidParameters(f"Triangle {t} is missing edges {missing}")

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "triangles", triangles)

    @property
    def dimension(self) -> int:
        if self.triangles:
            return 2
        return 1 if self.edges else 0

    def vertices(self) -> List[Simplex]:
        return [(v,) for v in range(self.n_vertices)]

    def simplices(self) -> Iterator[Simplex]:
        """Vertices, then edges, then triangles."""
        yield from self.vertices()
        yield from self.edges
        yield from self.triangles

    def __len__(self) -> int:
        return self.n_vertices + len(self.edges) + len(self.triangles)

    def one_skeleton(self) -> "SimplicialComplex2":
        return SimplicialComplex2(self.n_vertices, self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_vertices))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {"n_vertices": self.n_vertices,
                "edges": [list(e) for e in self.edges],
                "triangles": [list(t) for t in self.triangles]}


@dataclass(frozen=True)
class VertexFunction:
    """Real value per vertex, interpolated linearly over simplices."""
    values: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not all(math.isfinite(v) for v in values):
            raise InvalidParameters("Vertex values must be finite")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Iterable[float]) -> "VertexFunction":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, vertex: int) -> float:
        return self.values[vertex]

    def is_generic(self) -> bool:
        """Whether all vertex values are pairwise distinct."""
        return len(set(self.values)) == len(self.values)

    def negated(self) -> "VertexFunction":
        return VertexFunction(tuple(-v for v in self.values))

    def span(self, simplex: Sequence[int]) -> Tuple[float, float]:
        """Value range of a simplex."""
        vals = [self.values[v] for v in simplex]
        return min(vals), max(vals)

    def ranks(self, perturb: bool = False) -> np.ndarray:
        """
        Position of each vertex in the sorted order of values.

        Ties are broken by vertex index when perturb is set.

        Raises:
            NonGenericValues: On tied values without perturbation
        """
        if not perturb and not self.is_generic():
            tied = sorted({v for v in self.values if self.values.count(v) > 1})
            raise NonGenericValues(f"Tied vertex values {tied[:5]}; enable perturbation to break ties")
        order = np.lexsort((np.arange(len(self.values)), np.asarray(self.values)))
        ranks = np.empty(len(self.values), dtype=int)
        ranks[order] = np.arange(len(self.values))
        return ranks


def clique_complex(n_vertices: int, edges: Iterable[Tuple[int, int]]) -> SimplicialComplex2:
    """2-skeleton of the flag complex of a graph."""
    graph = nx.Graph()
    graph.add_nodes_from(range(n_vertices))
    graph.add_edges_from((u, v) for u, v in edges if u != v)
    triangles = []
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) == 3:
            triangles.append(tuple(sorted(clique)))
        elif len(clique) > 3:
            break
    logger.debug(f"Clique complex: {n_vertices} vertices, {graph.number_of_edges()} edges, "
                 f"{len(triangles)} triangles")
    return SimplicialComplex2(n_vertices, tuple(graph.edges()), tuple(triangles))


def triangle_edges(triangles: Iterable[Sequence[int]]) -> List[Simplex]:
    """All edges of a list of triangles, deduplicated."""
    return sorted({tuple(sorted(pair)) for t in triangles for pair in combinations(t, 2)})
