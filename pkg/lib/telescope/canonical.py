"""
Canonicalization of a telescope with respect to a cover.

The pipeline merges within regions, splits every critical value, pushes the
forks out of the intersections and merges again, so that each proper part
of the cover holds exactly one critical value and no intersection holds any.
"""
import logging
from typing import List, Optional

from ..covers import INTERSECTION, PROPER, CoverRegion, GomicCover
from ..errors import EndpointCollision, ForkExpected, OutOfRange
from .models import CombinatorialTelescope
from .operations import (DOWN_FORK, UP_FORK, fork_classify, merge_op,
                         shift_op, split_op)

logger = logging.getLogger(__name__)


def _values_in(telescope: CombinatorialTelescope, region: CoverRegion) -> List[float]:
    return [a for a in telescope.crit if region.interval.contains(a)]


def check_endpoints(telescope: CombinatorialTelescope, cover: GomicCover):
    """Raise EndpointCollision if a critical value is a cover endpoint."""
    hits = sorted(set(telescope.crit) & set(cover.endpoints()))
    if hits:
        raise EndpointCollision(f"Critical value(s) {hits} coincide with cover endpoints")


def merge_regions(telescope: CombinatorialTelescope, regions: List[CoverRegion]) -> CombinatorialTelescope:
    """Merge the critical values of each region holding two or more into one."""
    for region in regions:
        values = _values_in(telescope, region)
        if len(values) >= 2:
            telescope = merge_op(telescope, values[0], values[-1])
    return telescope


def split_all(telescope: CombinatorialTelescope, regions: List[CoverRegion]) -> CombinatorialTelescope:
    """Split each critical value by a quarter of its distance to the ends of its region."""
    for region in regions:
        for value in _values_in(telescope, region):
            eps = min(value - region.interval.lo, region.interval.hi - value) / 4
            telescope = split_op(telescope, value, eps)
    return telescope


def _proper_after(regions: List[CoverRegion], k: int) -> Optional[CoverRegion]:
    return regions[k + 1] if k + 1 < len(regions) and regions[k + 1].kind == PROPER else None


def _proper_before(regions: List[CoverRegion], k: int) -> Optional[CoverRegion]:
    return regions[k - 1] if k > 0 and regions[k - 1].kind == PROPER else None


def _require_fork(telescope: CombinatorialTelescope, value: float, kind: str):
    if kind not in fork_classify(telescope, value):
        raise ForkExpected(f"{value} is not a {kind.replace('_', '-')}")


def shift_forks(telescope: CombinatorialTelescope, regions: List[CoverRegion]) -> CombinatorialTelescope:
    """Push up-forks above and down-forks below every intersection."""
    for k, region in enumerate(regions):
        if region.kind != INTERSECTION:
            continue
        values = _values_in(telescope, region)
        if not values:
            continue
        lower, upper = values[0], values[-1]

        _require_fork(telescope, upper, UP_FORK)
        i = telescope.index_of(upper)
        ceiling = _proper_after(regions, k).interval.hi
        if i + 1 < telescope.n:
            ceiling = min(ceiling, telescope.crit[i + 1])
        target = (region.interval.hi + ceiling) / 2
        telescope = shift_op(telescope, upper, target - upper)

        _require_fork(telescope, lower, DOWN_FORK)
        i = telescope.index_of(lower)
        floor = _proper_before(regions, k).interval.lo
        if i > 0:
            floor = max(floor, telescope.crit[i - 1])
        target = (floor + region.interval.lo) / 2
        telescope = shift_op(telescope, lower, target - lower)
    return telescope


def merge_proper(telescope: CombinatorialTelescope, regions: List[CoverRegion]) -> CombinatorialTelescope:
    """Leave exactly one critical value in every proper part the support crosses."""
    for region in regions:
        if region.kind != PROPER:
            continue
        values = _values_in(telescope, region)
        if len(values) >= 2:
            telescope = merge_op(telescope, values[0], values[-1])
        elif not values:
            middle = region.interval.midpoint
            first, last = telescope.support()
            if first < middle < last:
                telescope = merge_op(telescope, middle, middle)
    return telescope


def canonicalize(telescope: CombinatorialTelescope, cover: GomicCover) -> CombinatorialTelescope:
    """
    Bring a telescope into canonical position for a cover.

    Raises:
        EndpointCollision: If a critical value is a cover endpoint
        OutOfRange: If the support is not strictly inside the covered range
    """
    check_endpoints(telescope, cover)
    covered = cover.covered_range()
    first, last = telescope.support()
    if not (covered.lo < first and last < covered.hi):
        raise OutOfRange(f"Support [{first:g}, {last:g}] is not inside the covered range {covered}")

    regions = cover.regions()
    telescope = merge_regions(telescope, regions)
    telescope = split_all(telescope, regions)
    telescope = shift_forks(telescope, regions)
    telescope = merge_proper(telescope, regions)
    logger.debug(f"Canonical form: {telescope.summary()}")
    return telescope
