"""
Diagram package - extended persistence diagrams and their transforms.
Provides typed point models, Merge/Split/Shift transforms and staircase pruning.
"""

# Core models
from .models import DiagramPoint, ExtendedDiagram, PointKind, Variant
# Pruning into signatures
from .pruning import (QUOTIENT_CLASSES, describe_features, ext_stair_kind,
                      prune_signature)
# Diagram transforms
from .transforms import merge_transform, shift_transform, split_transform

__all__ = [
    'DiagramPoint',
    'ExtendedDiagram',
    'PointKind',
    'Variant',
    'merge_transform',
    'split_transform',
    'shift_transform',
    'prune_signature',
    'describe_features',
    'ext_stair_kind',
    'QUOTIENT_CLASSES',
]
