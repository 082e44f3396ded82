"""
Exact bottleneck matching relative to a region of the plane.

A point may be matched to a point of the other diagram at its l-infinity
distance, or deleted at its distance to the region. The optimum is one of
finitely many candidate values, found by binary search with a bipartite
perfect-matching test at each threshold.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..covers import DiagonalBand, Staircase
from ..diagram import DiagramPoint, ExtendedDiagram

logger = logging.getLogger(__name__)

Region = Union[Staircase, DiagonalBand]


@dataclass
class MatchingResult:
    """Cost of an optimal partial matching with its pairs and deletions."""
    cost: float
    pairs: List[Tuple[DiagramPoint, DiagramPoint, float]] = field(default_factory=list)
    unmatched: List[Tuple[DiagramPoint, float]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cost": self.cost,
            "pairs": [{"from": p.to_dict(), "to": q.to_dict(), "distance": d}
                      for p, q, d in self.pairs],
            "unmatched": [{"point": p.to_dict(), "distance": d} for p, d in self.unmatched],
        }


def _coordinates(diagram: ExtendedDiagram) -> np.ndarray:
    return np.array([p.xy for p in diagram], dtype=float).reshape(-1, 2)


def _region_distances(diagram: ExtendedDiagram, theta: Region) -> np.ndarray:
    return np.array([theta.classify(p.xy)[1] for p in diagram], dtype=float)


class _Feasibility:
    """Perfect-matching test on the doubled bipartite graph at a threshold."""

    def __init__(self, pairwise: np.ndarray, left: np.ndarray, right: np.ndarray):
        self.pairwise = pairwise
        self.left = left
        self.right = right
        self.n, self.m = pairwise.shape

    def matching(self, t: float) -> Optional[np.ndarray]:
        """Row -> column assignment of a perfect matching, or None."""
        n, m = self.n, self.m
        size = n + m
        rows, cols = [], []

        # points of the first diagram: rows 0..n-1
        hit_i, hit_j = np.nonzero(self.pairwise <= t)
        rows.extend(hit_i.tolist())
        cols.extend(hit_j.tolist())
        for i in np.nonzero(self.left <= t)[0].tolist():
            rows.append(i)
            cols.append(m + i)

        # deletion slots of the second diagram: rows n..n+m-1
        for j in np.nonzero(self.right <= t)[0].tolist():
            rows.append(n + j)
            cols.append(j)
        for j in range(m):
            rows.extend([n + j] * n)
            cols.extend(range(m, m + n))

        graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
        assignment = maximum_bipartite_matching(graph, perm_type="column")
        if np.any(assignment < 0):
            return None
        return assignment


def staircase_bottleneck(diagram: ExtendedDiagram, other: ExtendedDiagram,
                         theta: Region) -> MatchingResult:
    """
    Bottleneck distance between two diagrams of one class relative to theta.

    Unmatched points pay their l-infinity distance to the closure of theta;
    points lying in theta are free to leave. Returns an infinite cost when no
    finite matching exists (an empty staircase with unequal point counts).
    """
    first, second = list(diagram), list(other)
    n, m = len(first), len(second)
    if n == 0 and m == 0:
        return MatchingResult(0.0)

    a, b = _coordinates(diagram), _coordinates(other)
    if n and m:
        pairwise = np.max(np.abs(a[:, None, :] - b[None, :, :]), axis=2)
    else:
        pairwise = np.zeros((n, m))
    left, right = _region_distances(diagram, theta), _region_distances(other, theta)

    candidates = np.unique(np.concatenate([[0.0], pairwise.ravel(), left, right]))
    candidates = candidates[np.isfinite(candidates)]
    test = _Feasibility(pairwise, left, right)

    best = test.matching(candidates[-1])
    if best is None:
        logger.debug(f"No finite matching between {n} and {m} point(s)")
        return MatchingResult(math.inf)

    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        assignment = test.matching(candidates[mid])
        if assignment is None:
            lo = mid + 1
        else:
            hi, best = mid, assignment

    result = MatchingResult(0.0)
    for i in range(n):
        j = int(best[i])
        if j < m:
            result.pairs.append((first[i], second[j], float(pairwise[i, j])))
        else:
            result.unmatched.append((first[i], float(left[i])))
    for j in range(m):
        if int(best[n + j]) == j:
            result.unmatched.append((second[j], float(right[j])))

    result.cost = max([d for _, _, d in result.pairs] + [d for _, d in result.unmatched], default=0.0)
    logger.debug(f"Bottleneck between {n} and {m} point(s): {result.cost:g} "
                 f"({len(result.pairs)} pair(s), {len(result.unmatched)} deletion(s))")
    return result


def bottleneck_distance(diagram: ExtendedDiagram, other: ExtendedDiagram) -> float:
    """Classic bottleneck distance: per (kind, dim) class with the diagonal as the free region."""
    classes = set(diagram.classes()) | set(other.classes())
    band = DiagonalBand()
    cost = 0.0
    for kind, dim in classes:
        matched = staircase_bottleneck(diagram.subdiagram(kind, dim),
                                       other.subdiagram(kind, dim), band)
        cost = max(cost, matched.cost)
    return cost
