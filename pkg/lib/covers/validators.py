"""
Gomic validation utilities.
Checks openness, minimality, overlap structure, genericity and connectedness of interval covers.
"""
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Sequence, Tuple

from ..errors import CoverValidationError, InvalidParameters
from .models import GomicCover, Interval

logger = logging.getLogger(__name__)

NOT_OPEN = "NOT_OPEN"
NOT_MINIMAL = "NOT_MINIMAL"
TRIPLE_OVERLAP = "TRIPLE_OVERLAP"
NOT_GENERIC = "NOT_GENERIC"
DISCONNECTED = "DISCONNECTED"


@dataclass
class CoverViolation:
    """One failed gomic condition, with the (sorted) interval indices involved."""
    kind: str
    indices: List[int]
    message: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


def _merged_components(intervals: Sequence[Interval]) -> List[Tuple[float, float]]:
    """Connected components of a union of open intervals."""
    components: List[Tuple[float, float]] = []
    for iv in sorted(intervals, key=lambda iv: (iv.lo, iv.hi)):
        # Open intervals sharing only an endpoint leave that point uncovered
        if components and iv.lo < components[-1][1]:
            lo, hi = components[-1]
            components[-1] = (lo, max(hi, iv.hi))
        else:
            components.append((iv.lo, iv.hi))
    return components


class CoverValidator:
    """Handles the individual gomic conditions on a sorted interval list."""

    @staticmethod
    def check_open(intervals: Sequence[Interval]) -> List[CoverViolation]:
        return [
            CoverViolation(NOT_OPEN, [k], f"Interval {iv} is not open")
            for k, iv in enumerate(intervals) if not iv.is_open
        ]

    @staticmethod
    def check_minimal(intervals: Sequence[Interval]) -> List[CoverViolation]:
        """Flag every interval contained in the union of the others."""
        violations = []
        for k, iv in enumerate(intervals):
            others = [other for j, other in enumerate(intervals) if j != k]
            if not others:
                continue
            for lo, hi in _merged_components(others):
                if lo <= iv.lo and iv.hi <= hi:
                    violations.append(CoverViolation(
                        NOT_MINIMAL, [k],
                        f"Interval {iv} lies inside the union of the other intervals"))
                    break
        return violations

    @staticmethod
    def check_overlaps(intervals: Sequence[Interval]) -> List[CoverViolation]:
        """Only consecutive intervals may intersect."""
        violations = []
        for i, first in enumerate(intervals):
            for j in range(i + 2, len(intervals)):
                if intervals[j].lo < first.hi:
                    violations.append(CoverViolation(
                        TRIPLE_OVERLAP, [i, j],
                        f"Non-consecutive intervals {first} and {intervals[j]} intersect"))
        return violations

    @staticmethod
    def check_generic(intervals: Sequence[Interval]) -> List[CoverViolation]:
        """Proper subintervals between two neighbors must have positive length."""
        violations = []
        for k in range(1, len(intervals) - 1):
            if intervals[k - 1].hi == intervals[k + 1].lo:
                violations.append(CoverViolation(
                    NOT_GENERIC, [k - 1, k, k + 1],
                    f"Proper part of {intervals[k]} is the single point {intervals[k - 1].hi:g}"))
        return violations

    @staticmethod
    def check_connected(intervals: Sequence[Interval]) -> List[CoverViolation]:
        components = _merged_components(intervals)
        if len(components) > 1:
            gaps = ", ".join(f"{hi:g}" for _, hi in components[:-1])
            return [CoverViolation(
                DISCONNECTED, list(range(len(intervals))),
                f"Union of the intervals is not an interval (breaks after {gaps})")]
        return []


def validate_gomic(intervals: Sequence[Interval]) -> GomicCover:
    """
    Validate a list of intervals as a generic, open, minimal interval cover.

    Args:
        intervals: Intervals in any order

    Returns:
        GomicCover with intervals sorted by lower endpoint

    Raises:
        InvalidParameters: If the list is empty
        CoverValidationError: Listing every violated condition
    """
    if not intervals:
        raise InvalidParameters("A cover needs at least one interval")

    ordered = sorted(intervals, key=lambda iv: (iv.lo, iv.hi))
    violations: List[CoverViolation] = []
    violations.extend(CoverValidator.check_open(ordered))
    violations.extend(CoverValidator.check_minimal(ordered))
    violations.extend(CoverValidator.check_overlaps(ordered))
    violations.extend(CoverValidator.check_generic(ordered))
    violations.extend(CoverValidator.check_connected(ordered))

    if violations:
        logger.debug(f"Rejected cover with {len(violations)} violation(s)")
        raise CoverValidationError(violations)

    logger.debug(f"Validated gomic with {len(ordered)} interval(s)")
    return GomicCover(tuple(ordered))


def cover_from_pairs(pairs: Sequence[Sequence[float]]) -> GomicCover:
    """Build and validate a cover from [lo, hi] pairs of open intervals."""
    return validate_gomic([Interval.open(lo, hi) for lo, hi in pairs])
