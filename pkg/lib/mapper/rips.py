"""
Rips graph construction and crossing-edge detection.
"""
import logging
from typing import Sequence, Set, Tuple

import numpy as np

from ..covers import GomicCover
from ..errors import InvalidParameters
from .models import PointCloud, RipsGraph

logger = logging.getLogger(__name__)


def rips_graph(cloud: PointCloud, delta: float) -> RipsGraph:
    """Exact threshold graph; pairs at distance exactly delta are adjacent."""
    if delta < 0:
        raise InvalidParameters(f"Rips threshold must be non-negative, got {delta}")
    close = np.triu(cloud.distance_matrix() <= delta, k=1)
    rows, cols = np.nonzero(close)
    edges = tuple(sorted(zip(rows.tolist(), cols.tolist())))
    logger.debug(f"Rips graph at delta={delta:g}: {len(cloud)} vertices, {len(edges)} edges")
    return RipsGraph(len(cloud), edges, float(delta))


def crossing_edges(graph: RipsGraph, values: Sequence[float], cover: GomicCover
                   ) -> Tuple[Set[Tuple[int, int]], Set[Tuple[int, int]]]:
    """
    Edges whose open value span contains a whole cover interval
    (interval-crossing) or a whole pairwise intersection (intersection-crossing).
    """
    intersections = [cover.intersection(k) for k in range(len(cover) - 1)]
    interval_crossing, intersection_crossing = set(), set()
    for u, v in graph.edges:
        lo, hi = sorted((values[u], values[v]))
        if any(lo <= iv.lo and iv.hi <= hi for iv in cover):
            interval_crossing.add((u, v))
        if any(lo <= iv.lo and iv.hi <= hi for iv in intersections):
            intersection_crossing.add((u, v))
    return interval_crossing, intersection_crossing
