"""
Mapper package - point clouds, Rips graphs and the Mapper family of constructions.
"""

from .constructions import (Connectivity, check_covered, mapper_continuous,
                            mapper_discrete, pi1_project)
from .inclusion import InclusionReport, inclusion_check
from .models import PointCloud, RipsGraph
from .rips import crossing_edges, rips_graph

__all__ = [
    'PointCloud',
    'RipsGraph',
    'rips_graph',
    'crossing_edges',
    'Connectivity',
    'check_covered',
    'mapper_discrete',
    'mapper_continuous',
    'pi1_project',
    'InclusionReport',
    'inclusion_check',
]
