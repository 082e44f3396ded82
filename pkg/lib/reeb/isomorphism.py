"""
Level-preserving isomorphism of leveled multigraphs.
"""
import logging
from typing import Dict

import networkx as nx

from .models import LeveledMultigraph

logger = logging.getLogger(__name__)


def _rank_graph(graph: LeveledMultigraph) -> nx.MultiGraph:
    """Multigraph whose nodes carry the rank of their level among occupied levels."""
    rank: Dict[float, int] = {level: k for k, level in enumerate(graph.occupied_levels())}
    result = graph.to_networkx()
    for node, level in enumerate(graph.levels):
        result.nodes[node]["rank"] = rank[level]
    return result


def _rank_profile(graph: nx.MultiGraph) -> list:
    return sorted(data["rank"] for _, data in graph.nodes(data=True))


def leveled_isomorphic(first: LeveledMultigraph, second: LeveledMultigraph) -> bool:
    """
    Whether a multigraph isomorphism maps levels by the order-preserving
    bijection between the two occupied level sets.
    """
    if first.n_nodes != second.n_nodes or first.n_edges != second.n_edges:
        return False
    if len(first.occupied_levels()) != len(second.occupied_levels()):
        return False

    first_ranked, second_ranked = _rank_graph(first), _rank_graph(second)
    if _rank_profile(first_ranked) != _rank_profile(second_ranked):
        return False

    matcher = nx.isomorphism.MultiGraphMatcher(
        first_ranked, second_ranked,
        node_match=lambda a, b: a["rank"] == b["rank"])
    found = matcher.is_isomorphic()
    logger.debug(f"Leveled isomorphism {first.summary()} vs {second.summary()}: {found}")
    return found
