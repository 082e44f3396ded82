"""
Reeb package - leveled multigraphs, Reeb graphs and quotient-map diagrams.
"""

from .builder import reeb_graph
from .isomorphism import leveled_isomorphic
from .models import Edge, LeveledMultigraph
from .quotient import quotient_diagram, subdivide_parallel_edges

__all__ = [
    'LeveledMultigraph',
    'Edge',
    'reeb_graph',
    'quotient_diagram',
    'subdivide_parallel_edges',
    'leveled_isomorphic',
]
