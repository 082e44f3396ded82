"""
Cover decomposition and staircase construction.
Splits each interval into lower overlap, proper part and upper overlap, and derives the four staircases.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import InvalidParameters
from .models import (GomicCover, Interval, Point, Square, StairKind,
                     Staircase)
from .validators import validate_gomic

logger = logging.getLogger(__name__)

PROPER = "proper"
INTERSECTION = "intersection"


@dataclass(frozen=True)
class CoverRegion:
    """A tile of the covered range: a proper part or a pairwise intersection."""
    kind: str
    interval: Interval
    owners: Tuple[int, ...]


def decompose_interval(cover: GomicCover, index: int
                       ) -> Tuple[Optional[Interval], Interval, Optional[Interval]]:
    """
    Partition cover interval `index` into (lower overlap, proper part, upper overlap).

    Missing overlaps are None. The proper part is closed on every side that
    borders a neighbor and open on the sides that are ends of the covered range.
    """
    if not 0 <= index < len(cover):
        raise InvalidParameters(f"Interval index {index} out of range for {len(cover)} intervals")

    current = cover[index]
    lower = upper = None
    lo, lo_closed = current.lo, False
    hi, hi_closed = current.hi, False

    if index > 0:
        lower = Interval.open(current.lo, cover[index - 1].hi)
        lo, lo_closed = cover[index - 1].hi, True
    if index < len(cover) - 1:
        upper = Interval.open(cover[index + 1].lo, current.hi)
        hi, hi_closed = cover[index + 1].lo, True

    return lower, Interval(lo, hi, lo_closed, hi_closed), upper


def cover_regions(cover: GomicCover) -> List[CoverRegion]:
    """Ordered tiling of the covered range, alternating proper parts and intersections."""
    regions: List[CoverRegion] = []
    for k in range(len(cover)):
        _, proper, upper = decompose_interval(cover, k)
        regions.append(CoverRegion(PROPER, proper, (k,)))
        if upper is not None:
            regions.append(CoverRegion(INTERSECTION, upper, (k, k + 1)))
    return regions


def uniform_cover(lo: float, hi: float, n: int, overlap_fraction: float) -> GomicCover:
    """
    Cover (lo, hi) by n open intervals of equal length L.

    Consecutive intervals overlap on overlap_fraction * L, so L solves
    (n - overlap_fraction * (n - 1)) * L = hi - lo. The last upper endpoint is
    pinned to hi to keep the covered range exact.
    """
    if n < 1:
        raise InvalidParameters(f"Interval count must be at least 1, got {n}")
    if not 0 < overlap_fraction < 0.5:
        raise InvalidParameters(f"Overlap fraction must lie in (0, 0.5), got {overlap_fraction}")
    if not lo < hi:
        raise InvalidParameters(f"Empty range ({lo}, {hi})")

    length = (hi - lo) / (n - overlap_fraction * (n - 1))
    step = (1 - overlap_fraction) * length
    intervals = []
    for k in range(n):
        start = lo + k * step
        end = hi if k == n - 1 else start + length
        intervals.append(Interval.open(start, end))

    logger.debug(f"Uniform cover of ({lo:g}, {hi:g}) with {n} intervals of length {length:g}")
    return validate_gomic(intervals)


def build_staircase(cover: GomicCover, kind: StairKind) -> Staircase:
    """Derive one of the four staircases of a cover."""
    kind = StairKind.parse(kind) if isinstance(kind, str) else kind
    squares: List[Square] = []

    if kind is StairKind.ORD:
        for k in range(len(cover)):
            _, proper, upper = decompose_interval(cover, k)
            span = Interval(proper.lo, cover[k].hi, proper.lo_closed, False) if upper else proper
            squares.append(Square(span, "above"))
    elif kind is StairKind.REL:
        for k in range(len(cover)):
            lower, proper, _ = decompose_interval(cover, k)
            span = Interval(cover[k].lo, proper.hi, False, proper.hi_closed) if lower else proper
            squares.append(Square(span, "below"))
    elif kind is StairKind.EXT_MINUS:
        squares = [Square(iv, "below") for iv in cover]
    else:
        if len(cover) == 1:
            squares = [Square(cover[0], "below")]
        else:
            squares = [Square(Interval.open(cover[k].lo, cover[k + 1].hi), "below")
                       for k in range(len(cover) - 1)]

    return Staircase(tuple(squares), kind)


def build_staircases(cover: GomicCover) -> dict:
    """All four staircases keyed by kind."""
    return {kind: build_staircase(cover, kind) for kind in StairKind}


def classify_point(stair, p: Point) -> Tuple[bool, float]:
    """Exact membership and l-infinity distance to the closure of a staircase or band."""
    return stair.classify(p)
