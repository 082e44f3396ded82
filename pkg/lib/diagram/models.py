"""
Extended persistence diagram data models.
Typed points, multiset diagrams and the construction variants they are pruned for.
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from ..errors import InvalidParameters


class PointKind(Enum):
    """Persistence point types of the extended filtration."""
    ORD = "ord"
    REL = "rel"
    EXT_PLUS = "ext_plus"
    EXT_MINUS = "ext_minus"

    @classmethod
    def _missing_(cls, value):
        """Accept the capitalized spellings used in diagram files."""
        if isinstance(value, str):
            key = value.strip().lower().replace("-", "_")
            aliases = {"extplus": "ext_plus", "extminus": "ext_minus"}
            key = aliases.get(key, key)
            for member in cls:
                if member.value == key:
                    return member
        return None

    @property
    def is_extended(self) -> bool:
        return self in (PointKind.EXT_PLUS, PointKind.EXT_MINUS)

    @property
    def label(self) -> str:
        return {"ord": "Ord", "rel": "Rel", "ext_plus": "ExtPlus", "ext_minus": "ExtMinus"}[self.value]


class Variant(Enum):
    """Mapper construction variant."""
    MULTINERVE = "multinerve"
    MAPPER = "mapper"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            key = value.strip().lower().replace("-", "").replace("_", "")
            for member in cls:
                if member.value == key:
                    return member
        return None


_SORT_RANK = {PointKind.ORD: 0, PointKind.REL: 1, PointKind.EXT_PLUS: 2, PointKind.EXT_MINUS: 3}


@dataclass(frozen=True)
class DiagramPoint:
    """Persistence point stored as (birth value, death value)."""
    birth: float
    death: float
    kind: PointKind
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise InvalidParameters(f"Negative homological dimension {self.dim}")
        if self.kind is PointKind.ORD and not self.birth < self.death:
            raise InvalidParameters(f"Ordinary point must have birth < death: {self}")
        if self.kind is PointKind.REL and not self.birth > self.death:
            raise InvalidParameters(f"Relative point must have birth > death: {self}")
        if self.kind is PointKind.EXT_PLUS and not self.birth <= self.death:
            raise InvalidParameters(f"Ext+ point must have birth <= death: {self}")
        if self.kind is PointKind.EXT_MINUS and not self.birth > self.death:
            raise InvalidParameters(f"Ext- point must have birth > death: {self}")

    @property
    def xy(self) -> Tuple[float, float]:
        return (self.birth, self.death)

    @property
    def span(self) -> float:
        """Vertical extent of the feature."""
        return abs(self.death - self.birth)

    def sort_key(self) -> Tuple[float, float, int, int]:
        return (self.birth, self.death, _SORT_RANK[self.kind], self.dim)

    def moved(self, birth: float, death: float) -> "DiagramPoint":
        return DiagramPoint(birth, death, self.kind, self.dim)

    def to_dict(self) -> Dict[str, Any]:
        return {"birth": self.birth, "death": self.death,
                "kind": self.kind.label, "dim": self.dim}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DiagramPoint":
        try:
            kind = PointKind(data["kind"])
        except ValueError:
            raise InvalidParameters(f"Unknown point kind: {data['kind']}")
        return cls(float(data["birth"]), float(data["death"]), kind, int(data["dim"]))

    def __str__(self) -> str:
        return f"{self.kind.label}_{self.dim}({self.birth:g},{self.death:g})"


@dataclass(frozen=True)
class ExtendedDiagram:
    """Multiset of typed persistence points, kept in a stable sorted order."""
    points: Tuple[DiagramPoint, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.points, key=DiagramPoint.sort_key))
        object.__setattr__(self, "points", ordered)

    @classmethod
    def of(cls, points: Iterable[DiagramPoint]) -> "ExtendedDiagram":
        return cls(tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[DiagramPoint]:
        return iter(self.points)

    def __add__(self, other: "ExtendedDiagram") -> "ExtendedDiagram":
        return ExtendedDiagram(self.points + other.points)

    def filter(self, predicate) -> "ExtendedDiagram":
        return ExtendedDiagram(tuple(p for p in self.points if predicate(p)))

    def subdiagram(self, kind: Optional[PointKind] = None,
                   dim: Optional[int] = None) -> "ExtendedDiagram":
        """Points of one kind and/or one dimension."""
        return self.filter(lambda p: (kind is None or p.kind is kind)
                           and (dim is None or p.dim == dim))

    def classes(self) -> List[Tuple[PointKind, int]]:
        """The (kind, dim) classes present, in stable order."""
        return sorted({(p.kind, p.dim) for p in self.points},
                      key=lambda c: (_SORT_RANK[c[0]], c[1]))

    def counts(self) -> Dict[Tuple[PointKind, int], int]:
        return dict(Counter((p.kind, p.dim) for p in self.points))

    def quotient_part(self) -> "ExtendedDiagram":
        """Keep what a quotient map on a graph can carry: drop Ord_1, Ext+_1 and dims >= 2."""
        return self.filter(lambda p: p.dim <= 1 and not (
            p.dim == 1 and p.kind in (PointKind.ORD, PointKind.EXT_PLUS)))

    def drop_diagonal_cycles(self) -> "ExtendedDiagram":
        """Remove points of dimension >= 1 with birth == death."""
        return self.filter(lambda p: not (p.dim >= 1 and p.birth == p.death))

    def reflect_central(self) -> "ExtendedDiagram":
        """Ord_r <-> Rel_{r+1} under (x, y) -> (-x, -y); extended points are dropped."""
        moved = []
        for p in self.points:
            if p.kind is PointKind.ORD:
                moved.append(DiagramPoint(-p.birth, -p.death, PointKind.REL, p.dim + 1))
            elif p.kind is PointKind.REL and p.dim >= 1:
                moved.append(DiagramPoint(-p.birth, -p.death, PointKind.ORD, p.dim - 1))
        return ExtendedDiagram(tuple(moved))

    def reflect_minor(self) -> "ExtendedDiagram":
        """Extended points under (x, y) -> (-y, -x); ordinary and relative points are dropped."""
        return ExtendedDiagram(tuple(
            DiagramPoint(-p.death, -p.birth, p.kind, p.dim)
            for p in self.points if p.kind.is_extended))

    def negation_image(self) -> "ExtendedDiagram":
        """The diagram of f predicted from this diagram of -f."""
        return self.reflect_central() + self.reflect_minor()

    def coordinates(self) -> List[float]:
        return sorted({x for p in self.points for x in p.xy})

    def to_list(self) -> List[Dict[str, Any]]:
        return [p.to_dict() for p in self.points]

    @classmethod
    def from_list(cls, data: Iterable[Dict[str, Any]]) -> "ExtendedDiagram":
        return cls(tuple(DiagramPoint.from_dict(item) for item in data))

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.points) + "}"
