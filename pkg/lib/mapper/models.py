"""
Point cloud and Rips graph data models.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.spatial.distance import pdist, squareform

from ..complex import SimplicialComplex2, VertexFunction, clique_complex
from ..errors import InvalidParameters

logger = logging.getLogger(__name__)


@dataclass
class PointCloud:
    """
    Sample points with one function value each.

    Geometry is given either as coordinates in R^d or as an explicit
    distance matrix; the triangle inequality is not checked.
    """
    values: np.ndarray
    coordinates: Optional[np.ndarray] = None
    distances: Optional[np.ndarray] = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float).reshape(-1)
        if (self.coordinates is None) == (self.distances is None):
            raise InvalidParameters("Give exactly one of coordinates or a distance matrix")
        n = len(self.values)
        if not np.all(np.isfinite(self.values)):
            raise InvalidParameters("Point values must be finite")

        if self.coordinates is not None:
            self.coordinates = np.asarray(self.coordinates, dtype=float)
            if self.coordinates.ndim == 1:
                self.coordinates = self.coordinates.reshape(-1, 1)
            if self.coordinates.shape[0] != n:
                raise InvalidParameters(
                    f"{self.coordinates.shape[0]} points for {n} values")
        else:
            self.distances = np.asarray(self.distances, dtype=float)
            if self.distances.shape != (n, n):
                raise InvalidParameters(f"Distance matrix must be {n}x{n}")
            if not np.allclose(self.distances, self.distances.T):
                raise InvalidParameters("Distance matrix is not symmetric")
            if np.any(np.diag(self.distances) != 0):
                raise InvalidParameters("Distance matrix has a nonzero diagonal")

    def __len__(self) -> int:
        return len(self.values)

    def distance_matrix(self) -> np.ndarray:
        if self.distances is not None:
            return self.distances
        if len(self) < 2:
            return np.zeros((len(self), len(self)))
        return squareform(pdist(self.coordinates))

    def function(self) -> VertexFunction:
        return VertexFunction(tuple(float(v) for v in self.values))


@dataclass(frozen=True)
class RipsGraph:
    """Threshold graph: p and q are adjacent iff d(p, q) <= delta."""
    n_vertices: int
    edges: Tuple[Tuple[int, int], ...]
    delta: float

    def one_skeleton(self) -> SimplicialComplex2:
        return SimplicialComplex2(self.n_vertices, self.edges)

    def clique_complex(self) -> SimplicialComplex2:
        """Rips complex restricted to dimension two."""
        return clique_complex(self.n_vertices, self.edges)

    def to_dict(self) -> Dict[str, Any]:
        return {"n_vertices": self.n_vertices, "delta": self.delta,
                "edges": [list(e) for e in self.edges]}
