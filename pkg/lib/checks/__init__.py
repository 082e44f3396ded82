"""
Checks package - random instance generators and verification sweeps.
"""

from .generators import (random_cover, random_graph_values,
                         random_point_cloud, random_quotient_diagram,
                         random_telescope)
from .sweeps import (CHECKS, CheckOutcome, CheckReport, default_trials,
                     run_checks)

__all__ = [
    'random_cover',
    'random_telescope',
    'random_graph_values',
    'random_point_cloud',
    'random_quotient_diagram',
    'CheckOutcome',
    'CheckReport',
    'CHECKS',
    'default_trials',
    'run_checks',
]
