"""
Covers package - interval covers of the real line and their staircases.
Provides gomic validation, interval decomposition and staircase construction.
"""

# Models and decomposition
from .decomposition import (INTERSECTION, PROPER, CoverRegion,
                            build_staircase, build_staircases,
                            classify_point, cover_regions, decompose_interval,
                            uniform_cover)
from .models import (DiagonalBand, GomicCover, Interval, Point, Square,
                     StairKind, Staircase)
# Validation
from .validators import (CoverValidator, CoverViolation, cover_from_pairs,
                         validate_gomic)

__all__ = [
    # Models
    'Interval',
    'GomicCover',
    'StairKind',
    'Square',
    'Staircase',
    'DiagonalBand',
    'Point',
    'CoverRegion',
    'PROPER',
    'INTERSECTION',

    # Validation
    'CoverValidator',
    'CoverViolation',
    'validate_gomic',
    'cover_from_pairs',

    # Decomposition and staircases
    'decompose_interval',
    'cover_regions',
    'uniform_cover',
    'build_staircase',
    'build_staircases',
    'classify_point',
]
