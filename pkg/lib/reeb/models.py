"""
Leveled multigraph data model.
Shared by combinatorial Reeb graphs, telescope graphs and (MultiNerve) Mappers.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import networkx as nx

from ..errors import InvalidParameters

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class LeveledMultigraph:
    """
    Nodes carry real levels; edges form a multiset of node pairs.

    Every edge joins nodes on two consecutive occupied levels and is stored
    as (lower node, upper node).
    """
    levels: Tuple[float, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        levels = tuple(float(x) for x in self.levels)
        if not all(math.isfinite(x) for x in levels):
            raise InvalidParameters("Node levels must be finite")

        occupied = sorted(set(levels))
        position = {x: k for k, x in enumerate(occupied)}
        normalized = []
        for u, v in self.edges:
            if not (0 <= u < len(levels) and 0 <= v < len(levels)):
                raise InvalidParameters(f"Edge ({u}, {v}) uses an unknown node")
            if levels[u] > levels[v]:
                u, v = v, u
            if position[levels[v]] - position[levels[u]] != 1:
                raise InvalidParameters(
                    f"Edge ({u}, {v}) does not join consecutive levels "
                    f"({levels[u]:g} -> {levels[v]:g})")
            normalized.append((u, v))

        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def n_nodes(self) -> int:
        return len(self.levels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def occupied_levels(self) -> List[float]:
        return sorted(set(self.levels))

    def edge_counts(self) -> Counter:
        """Multiplicity of each edge."""
        return Counter(self.edges)

    def degree(self, node: int) -> int:
        return sum((u == node) + (v == node) for u, v in self.edges)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for node, level in enumerate(self.levels):
            graph.add_node(node, level=level)
        graph.add_edges_from(self.edges)
        return graph

    def betti_numbers(self) -> Tuple[int, int]:
        """(b0, b1) of the multigraph as a 1-complex."""
        b0 = nx.number_connected_components(self.to_networkx()) if self.n_nodes else 0
        return b0, self.n_edges - self.n_nodes + b0

    def simple(self) -> "LeveledMultigraph":
        """Same nodes, one edge per adjacent pair."""
        return LeveledMultigraph(self.levels, tuple(sorted(set(self.edges))))

    def relabeled(self, order: Sequence[int]) -> "LeveledMultigraph":
        """Renumber nodes so that new node k is old node order[k]."""
        new_index = {old: new for new, old in enumerate(order)}
        return LeveledMultigraph(
            tuple(self.levels[old] for old in order),
            tuple((new_index[u], new_index[v]) for u, v in self.edges))

    def to_dict(self) -> Dict[str, Any]:
        return {"nodes": [{"id": k, "level": level} for k, level in enumerate(self.levels)],
                "edges": [[u, v] for u, v in self.edges]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LeveledMultigraph":
        nodes = sorted(data["nodes"], key=lambda n: n["id"])
        index = {n["id"]: k for k, n in enumerate(nodes)}
        return cls(tuple(float(n["level"]) for n in nodes),
                   tuple((index[u], index[v]) for u, v in data.get("edges", [])))

    def summary(self) -> str:
        return f"{self.n_nodes} node(s), {self.n_edges} edge(s) on {len(self.occupied_levels())} level(s)"
