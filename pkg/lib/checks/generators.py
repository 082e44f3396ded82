"""
Random instance generators for the verification sweeps.

All generators draw from a numpy Generator so that a seed reproduces a sweep.
"""
import logging
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from ..complex import SimplicialComplex2, VertexFunction
from ..covers import GomicCover, Interval, validate_gomic
from ..diagram import DiagramPoint, ExtendedDiagram, PointKind
from ..mapper import PointCloud
from ..telescope import CombinatorialTelescope, Cylinder

logger = logging.getLogger(__name__)


def random_cover(rng: np.random.Generator, n: Optional[int] = None,
                 start: float = 0.0) -> GomicCover:
    """
    Gomic with n intervals built from 2n increasing endpoints e_0 < ... < e_{2n-1}.

    Interval k runs from e_{2k-1} (e_0 for the first) to e_{2k+2} (e_{2n-1}
    for the last), so consecutive intervals overlap on (e_{2k+1}, e_{2k+2}).
    """
    n = int(rng.integers(1, 6)) if n is None else n
    e = start + np.cumsum(rng.uniform(0.3, 1.5, size=2 * n))
    intervals = []
    for k in range(n):
        lo = e[0] if k == 0 else e[2 * k - 1]
        hi = e[2 * n - 1] if k == n - 1 else e[2 * k + 2]
        intervals.append(Interval.open(float(lo), float(hi)))
    return validate_gomic(intervals)


def _values_inside(rng: np.random.Generator, cover: GomicCover, count: int) -> List[float]:
    """Distinct values strictly inside the covered range, away from every endpoint."""
    covered = cover.covered_range()
    endpoints = set(cover.endpoints())
    values: List[float] = []
    while len(values) < count:
        x = float(rng.uniform(covered.lo, covered.hi))
        if x not in endpoints and x not in values and covered.lo < x < covered.hi:
            values.append(x)
    return values


def random_telescope(rng: np.random.Generator, cover: Optional[GomicCover] = None,
                     max_values: int = 6, fork_bias: float = 0.4) -> CombinatorialTelescope:
    """
    Telescope with up to max_values critical values inside the cover's range
    (or inside (0, 6) without a cover).

    With probability fork_bias a cylinder is made a bijection onto the slice
    above, and with the same probability onto the slice below, so forks are
    common.
    """
    count = int(rng.integers(1, max_values + 1))
    if cover is None:
        crit = sorted(set(float(x) for x in rng.uniform(0.0, 6.0, size=count)))
    else:
        crit = sorted(_values_inside(rng, cover, count))

    slices = [tuple(f"x{i}_{k}" for k in range(int(rng.integers(1, 3)))) for i in range(len(crit))]
    cylinders = []
    for j in range(len(crit) - 1):
        below, above = slices[j], slices[j + 1]
        roll = rng.random()
        if roll < fork_bias:
            labels = tuple(f"y{j}_{k}" for k in range(len(above)))
            upper = dict(zip(labels, above))
            lower = {y: below[int(rng.integers(len(below)))] for y in labels}
        elif roll < 2 * fork_bias:
            labels = tuple(f"y{j}_{k}" for k in range(len(below)))
            lower = dict(zip(labels, below))
            upper = {y: above[int(rng.integers(len(above)))] for y in labels}
        else:
            labels = tuple(f"y{j}_{k}" for k in range(int(rng.integers(1, 4))))
            lower = {y: below[int(rng.integers(len(below)))] for y in labels}
            upper = {y: above[int(rng.integers(len(above)))] for y in labels}
        cylinders.append(Cylinder(labels, lower, upper))
    return CombinatorialTelescope(tuple(crit), tuple(slices), tuple(cylinders))


def random_graph_values(rng: np.random.Generator, n_vertices: Optional[int] = None,
                        edge_probability: float = 0.35, lo: float = 0.0,
                        hi: float = 3.0) -> Tuple[SimplicialComplex2, VertexFunction]:
    """Erdos-Renyi graph as a 1-complex with distinct uniform vertex values."""
    n = int(rng.integers(2, 10)) if n_vertices is None else n_vertices
    graph = nx.gnp_random_graph(n, edge_probability, seed=int(rng.integers(2 ** 31)))
    edges = tuple(sorted(tuple(sorted(e)) for e in graph.edges()))
    values = rng.permutation(np.linspace(lo, hi, n)) + rng.uniform(-0.01, 0.01, size=n)
    return SimplicialComplex2(n, edges), VertexFunction(tuple(float(v) for v in values))


def random_point_cloud(rng: np.random.Generator, cover: GomicCover, n_points: Optional[int] = None,
                       dim: int = 2) -> PointCloud:
    """Uniform points in the unit cube with values inside the cover's range."""
    n = int(rng.integers(1, 16)) if n_points is None else n_points
    coordinates = rng.uniform(0.0, 1.0, size=(n, dim))
    return PointCloud(np.array(_values_inside(rng, cover, n)), coordinates=coordinates)


def random_quotient_diagram(rng: np.random.Generator, lo: float, hi: float,
                            size: Optional[int] = None) -> ExtendedDiagram:
    """Random points of the four classes a graph's quotient diagram can hold."""
    size = int(rng.integers(0, 8)) if size is None else size
    points = []
    for _ in range(size):
        x, y = sorted(float(v) for v in rng.uniform(lo, hi, size=2))
        if x == y:
            continue
        kind, dim = [(PointKind.ORD, 0), (PointKind.EXT_PLUS, 0),
                     (PointKind.EXT_MINUS, 1), (PointKind.REL, 1)][int(rng.integers(4))]
        if kind in (PointKind.ORD, PointKind.EXT_PLUS):
            points.append(DiagramPoint(x, y, kind, dim))
        else:
            points.append(DiagramPoint(y, x, kind, dim))
    return ExtendedDiagram(tuple(points))
