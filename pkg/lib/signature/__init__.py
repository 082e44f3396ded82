"""
Signature package - staircase bottleneck matchings and signature distances.
Provides the Mapper-signature metric, cover discrepancy, staircase Hausdorff bounds and signature pipelines.
"""

# Matchings
from .distance import (TYPE_GROUPS, DistanceReport, cover_discrepancy,
                       mapper_distance, mapper_distance_report,
                       type_staircases)
from .hausdorff import max_staircase_hausdorff, staircase_hausdorff
from .matching import MatchingResult, bottleneck_distance, staircase_bottleneck
# Pipelines
from .pipeline import (approximate_signature, complex_signature,
                       convergence_sweep, graph_signature)

__all__ = [
    'MatchingResult',
    'staircase_bottleneck',
    'bottleneck_distance',
    'TYPE_GROUPS',
    'DistanceReport',
    'type_staircases',
    'mapper_distance',
    'mapper_distance_report',
    'cover_discrepancy',
    'staircase_hausdorff',
    'max_staircase_hausdorff',
    'complex_signature',
    'graph_signature',
    'approximate_signature',
    'convergence_sweep',
]
