"""
Complex package - simplicial complexes of dimension <= 2 with vertex functions.
Provides extended persistence by boundary reduction and PL preimage components.
"""

# Core models
from .betti import betti_numbers, gf2_rank
from .boundary import BoundaryMatrix, ReductionResult, ReductionStats
from .filtration import (ORDINARY, RELATIVE, Filtration, FiltrationEntry,
                         build_extended_filtration)
from .levelsets import (Component, component_of, group_by_faces,
                        levelset_components, participating_simplices)
from .models import (Simplex, SimplicialComplex2, VertexFunction,
                     clique_complex, facets, triangle_edges)
from .persistence import extended_persistence

__all__ = [
    # Models
    'Simplex',
    'SimplicialComplex2',
    'VertexFunction',
    'clique_complex',
    'triangle_edges',
    'facets',

    # Persistence
    'Filtration',
    'FiltrationEntry',
    'ORDINARY',
    'RELATIVE',
    'build_extended_filtration',
    'BoundaryMatrix',
    'ReductionResult',
    'ReductionStats',
    'extended_persistence',

    # Preimages and homology
    'Component',
    'levelset_components',
    'participating_simplices',
    'group_by_faces',
    'component_of',
    'betti_numbers',
    'gf2_rank',
]
