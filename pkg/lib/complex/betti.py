"""
Betti numbers over Z/2 by dense elimination.
"""
from typing import Dict, Tuple

import networkx as nx
import numpy as np

from .models import SimplicialComplex2, facets


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank of a 0/1 matrix over Z/2."""
    m = (np.asarray(matrix, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape if m.ndim == 2 else (0, 0)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        below = np.nonzero(m[:, col])[0]
        for r in below:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
    return rank


def triangle_boundary_matrix(complex_: SimplicialComplex2) -> np.ndarray:
    """Edge-by-triangle incidence matrix."""
    edge_index: Dict[Tuple[int, ...], int] = {e: i for i, e in enumerate(complex_.edges)}
    matrix = np.zeros((len(complex_.edges), len(complex_.triangles)), dtype=np.uint8)
    for j, t in enumerate(complex_.triangles):
        for e in facets(t):
            matrix[edge_index[e], j] = 1
    return matrix


def betti_numbers(complex_: SimplicialComplex2) -> Tuple[int, int]:
    """(b0, b1) of the complex with Z/2 coefficients."""
    b0 = nx.number_connected_components(complex_.to_networkx()) if complex_.n_vertices else 0
    cycle_rank = len(complex_.edges) - complex_.n_vertices + b0
    b1 = cycle_rank - gf2_rank(triangle_boundary_matrix(complex_))
    return b0, b1
