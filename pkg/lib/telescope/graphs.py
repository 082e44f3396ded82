"""
Conversions between combinatorial telescopes and leveled multigraphs.
"""
import logging
from typing import Dict, List, Tuple

from ..reeb import LeveledMultigraph
from .models import CombinatorialTelescope, Cylinder

logger = logging.getLogger(__name__)


def node_index(telescope: CombinatorialTelescope) -> Dict[Tuple[int, str], int]:
    """Graph node of each (slice position, label), numbered slice by slice."""
    index: Dict[Tuple[int, str], int] = {}
    for i, labels in enumerate(telescope.slices):
        for label in labels:
            index[(i, label)] = len(index)
    return index


def telescope_to_graph(telescope: CombinatorialTelescope) -> LeveledMultigraph:
    """One node per slice component at its critical value, one edge per cylinder component."""
    index = node_index(telescope)
    levels = [telescope.crit[i] for i, labels in enumerate(telescope.slices) for _ in labels]
    edges = [
        (index[(i, cylinder.lower[y])], index[(i + 1, cylinder.upper[y])])
        for i, cylinder in enumerate(telescope.cylinders)
        for y in cylinder.labels
    ]
    return LeveledMultigraph(tuple(levels), tuple(edges))


def graph_to_telescope(graph: LeveledMultigraph) -> CombinatorialTelescope:
    """Telescope whose slices are the nodes of each occupied level and whose cylinders are the edges."""
    levels = graph.occupied_levels()
    position = {level: i for i, level in enumerate(levels)}

    slices: List[List[str]] = [[] for _ in levels]
    for node, level in enumerate(graph.levels):
        slices[position[level]].append(f"n{node}")

    pieces: List[Dict[str, Dict[str, str]]] = [
        {"lower": {}, "upper": {}} for _ in range(len(levels) - 1)]
    labels: List[List[str]] = [[] for _ in range(len(levels) - 1)]
    for k, (u, v) in enumerate(graph.edges):
        i = position[graph.levels[u]]
        y = f"e{k}"
        labels[i].append(y)
        pieces[i]["lower"][y] = f"n{u}"
        pieces[i]["upper"][y] = f"n{v}"

    cylinders = tuple(Cylinder(tuple(labels[i]), pieces[i]["lower"], pieces[i]["upper"])
                      for i in range(len(levels) - 1))
    telescope = CombinatorialTelescope(tuple(levels), tuple(tuple(s) for s in slices), cylinders)
    logger.debug(f"Graph {graph.summary()} as {telescope.summary()}")
    return telescope
