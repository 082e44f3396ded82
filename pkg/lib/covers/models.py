"""
Interval, cover and staircase data models.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..errors import InvalidParameters

Point = Tuple[float, float]


@dataclass(frozen=True)
class Interval:
    """Real interval with independently open or closed ends."""
    lo: float
    hi: float
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidParameters(f"Interval endpoints must be finite: ({self.lo}, {self.hi})")
        if self.lo > self.hi:
            raise InvalidParameters(f"Interval has lo > hi: ({self.lo}, {self.hi})")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise InvalidParameters(f"Empty interval at {self.lo}")

    @classmethod
    def open(cls, lo: float, hi: float) -> "Interval":
        return cls(float(lo), float(hi), False, False)

    @classmethod
    def closed(cls, lo: float, hi: float) -> "Interval":
        return cls(float(lo), float(hi), True, True)

    @property
    def is_open(self) -> bool:
        return not (self.lo_closed or self.hi_closed)

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2

    def contains(self, x: float) -> bool:
        """Membership honoring open and closed ends."""
        above = self.lo < x or (self.lo_closed and x == self.lo)
        below = x < self.hi or (self.hi_closed and x == self.hi)
        return above and below

    def meets_range(self, lo: float, hi: float) -> bool:
        """Whether the closed range [lo, hi] intersects this interval."""
        if hi < self.lo or (hi == self.lo and not self.lo_closed):
            return False
        if lo > self.hi or (lo == self.hi and not self.hi_closed):
            return False
        return True

    def to_list(self) -> List[float]:
        return [self.lo, self.hi]

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo:g},{self.hi:g}{right}"


@dataclass(frozen=True)
class GomicCover:
    """Generic, open, minimal interval cover; build it with validate_gomic."""
    intervals: Tuple[Interval, ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __getitem__(self, index: int) -> Interval:
        return self.intervals[index]

    def endpoints(self) -> Tuple[float, ...]:
        """End(I): every interval endpoint, sorted."""
        return tuple(sorted({x for iv in self.intervals for x in (iv.lo, iv.hi)}))

    def covered_range(self) -> Interval:
        return Interval.open(self.intervals[0].lo, self.intervals[-1].hi)

    def granularity(self) -> float:
        """Length of the longest interval."""
        return max(iv.length for iv in self.intervals)

    def covers(self, x: float) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def intersection(self, index: int) -> Interval:
        """Overlap of intervals index and index + 1."""
        return Interval.open(self.intervals[index + 1].lo, self.intervals[index].hi)

    def regions(self) -> List[Any]:
        """Proper parts and intersections in increasing order."""
        from .decomposition import cover_regions
        return cover_regions(self)

    def to_list(self) -> List[List[float]]:
        return [iv.to_list() for iv in self.intervals]


class StairKind(Enum):
    """The four cover-derived staircases."""
    ORD = "ord"
    REL = "rel"
    EXT_MINUS = "ext_minus"
    EXT = "ext"

    @classmethod
    def parse(cls, name: str) -> "StairKind":
        aliases = {
            "ordstair": cls.ORD, "relstair": cls.REL,
            "extminusstair": cls.EXT_MINUS, "extstair": cls.EXT,
        }
        key = name.strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise InvalidParameters(f"Unknown staircase kind: {name}")


@dataclass(frozen=True)
class Square:
    """Half-square over an interval: above is a<=x<=y<=b, below is a<=y<x<=b."""
    interval: Interval
    side: str

    def __post_init__(self):
        if self.side not in ("above", "below"):
            raise InvalidParameters(f"Unknown half-square side: {self.side}")
        if self.interval.length <= 0:
            raise InvalidParameters(f"Degenerate half-square over {self.interval}")

    def contains(self, p: Point) -> bool:
        x, y = p
        a, b = self.interval.lo, self.interval.hi
        if self.side == "above":
            return a <= x <= y <= b
        return a <= y < x <= b

    def distance(self, p: Point) -> float:
        """l-infinity distance to the closed half-square."""
        x, y = p
        a, b = self.interval.lo, self.interval.hi
        if self.side == "above":
            return max(0.0, a - x, y - b, a - y, x - b, (x - y) / 2)
        return max(0.0, a - y, x - b, a - x, y - b, (y - x) / 2)

    def corners(self) -> List[Point]:
        a, b = self.interval.lo, self.interval.hi
        if self.side == "above":
            return [(a, a), (a, b), (b, b)]
        return [(a, a), (b, a), (b, b)]


@dataclass(frozen=True)
class Staircase:
    """Finite union of half-squares."""
    squares: Tuple[Square, ...]
    kind: Optional[StairKind] = None

    def contains(self, p: Point) -> bool:
        return any(sq.contains(p) for sq in self.squares)

    def distance(self, p: Point) -> float:
        if not self.squares:
            return math.inf
        return min(sq.distance(p) for sq in self.squares)

    def classify(self, p: Point) -> Tuple[bool, float]:
        if self.contains(p):
            return True, 0.0
        return False, self.distance(p)

    def endpoints(self) -> List[float]:
        return sorted({x for sq in self.squares for x in (sq.interval.lo, sq.interval.hi)})

    def to_dict(self) -> List[Dict[str, Any]]:
        return [{"interval": sq.interval.to_list(), "side": sq.side} for sq in self.squares]


@dataclass(frozen=True)
class DiagonalBand:
    """The diagonal segment over [lo, hi]; unbounded when an end is None."""
    lo: Optional[float] = None
    hi: Optional[float] = None

    def _foot(self, p: Point) -> float:
        t = (p[0] + p[1]) / 2
        if self.lo is not None:
            t = max(t, self.lo)
        if self.hi is not None:
            t = min(t, self.hi)
        return t

    def contains(self, p: Point) -> bool:
        return p[0] == p[1] and self._foot(p) == p[0]

    def distance(self, p: Point) -> float:
        t = self._foot(p)
        return max(abs(p[0] - t), abs(p[1] - t))

    def classify(self, p: Point) -> Tuple[bool, float]:
        if self.contains(p):
            return True, 0.0
        return False, self.distance(p)

