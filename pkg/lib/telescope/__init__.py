"""
Telescope package - component-level telescopes and their surgeries.
Provides Merge/Split/Shift, fork classification, canonicalization and Mapper construction.
"""

# Models, conversions and canonical form
from .canonical import canonicalize, check_endpoints
from .graphs import graph_to_telescope, node_index, telescope_to_graph
from .models import CombinatorialTelescope, Cylinder
from .multinerve import multinerve_of_telescope, preimage_components
# Surgeries
from .operations import (DOWN_FORK, UP_FORK, fork_classify, merge_op,
                         shift_op, split_op)

__all__ = [
    'CombinatorialTelescope',
    'Cylinder',
    'telescope_to_graph',
    'graph_to_telescope',
    'node_index',
    'merge_op',
    'split_op',
    'shift_op',
    'fork_classify',
    'UP_FORK',
    'DOWN_FORK',
    'canonicalize',
    'check_endpoints',
    'multinerve_of_telescope',
    'preimage_components',
]
