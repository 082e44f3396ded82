"""
Combinatorial telescope data model.
Slices and cylinders are sets of component labels; attaching maps are set maps.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import InvalidParameters, OutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cylinder:
    """Components Y_i of the product piece between two consecutive critical values."""
    labels: Tuple[str, ...]
    lower: Mapping[str, str] = field(default_factory=dict)
    upper: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "lower", dict(self.lower))
        object.__setattr__(self, "upper", dict(self.upper))

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "Cylinder":
        """Cylinder over a slice whose components map to themselves at both ends."""
        return cls(tuple(labels), {x: x for x in labels}, {x: x for x in labels})

    def __len__(self) -> int:
        return len(self.labels)

    def to_dict(self) -> Dict[str, Any]:
        return {"labels": list(self.labels), "lower": dict(self.lower), "upper": dict(self.upper)}


@dataclass(frozen=True)
class CombinatorialTelescope:
    """
    Component-level telescope with compact support.

    crit holds the strictly increasing critical values a_1..a_n, slices the
    component labels X_i of each critical level set, and cylinders the
    components Y_i between a_i and a_{i+1} with their maps into X_i and X_{i+1}.
    """
    crit: Tuple[float, ...]
    slices: Tuple[Tuple[str, ...], ...]
    cylinders: Tuple[Cylinder, ...] = ()

    def __post_init__(self):
        crit = tuple(float(a) for a in self.crit)
        slices = tuple(tuple(s) for s in self.slices)
        object.__setattr__(self, "crit", crit)
        object.__setattr__(self, "slices", slices)
        object.__setattr__(self, "cylinders", tuple(self.cylinders))
        self._validate()

    def _validate(self):
        n = len(self.crit)
        if n == 0:
            raise InvalidParameters("A telescope needs at least one critical value")
        if any(a >= b for a, b in zip(self.crit, self.crit[1:])):
            raise InvalidParameters(f"Critical values must be strictly increasing: {self.crit}")
        if len(self.slices) != n or len(self.cylinders) != n - 1:
            raise InvalidParameters(
                f"{n} critical values need {n} slices and {n - 1} cylinders, "
                f"got {len(self.slices)} and {len(self.cylinders)}")
        for i, labels in enumerate(self.slices):
            if len(set(labels)) != len(labels):
                raise InvalidParameters(f"Duplicate labels in slice {i}")
        for i, cylinder in enumerate(self.cylinders):
            if len(set(cylinder.labels)) != len(cylinder.labels):
                raise InvalidParameters(f"Duplicate labels in cylinder {i}")
            below, above = set(self.slices[i]), set(self.slices[i + 1])
            for y in cylinder.labels:
                if cylinder.lower.get(y) not in below:
                    raise InvalidParameters(f"Cylinder {i}: lower map undefined or invalid at {y}")
                if cylinder.upper.get(y) not in above:
                    raise InvalidParameters(f"Cylinder {i}: upper map undefined or invalid at {y}")

    @property
    def n(self) -> int:
        return len(self.crit)

    def support(self) -> Tuple[float, float]:
        return self.crit[0], self.crit[-1]

    def index_of(self, value: float) -> int:
        """Position of a critical value."""
        try:
            return self.crit.index(value)
        except ValueError:
            raise OutOfRange(f"{value} is not a critical value of the telescope")

    def neighbors(self, i: int) -> Tuple[Optional[float], Optional[float]]:
        below = self.crit[i - 1] if i > 0 else None
        above = self.crit[i + 1] if i < self.n - 1 else None
        return below, above

    def cylinder_below(self, i: int) -> Optional[Cylinder]:
        return self.cylinders[i - 1] if i > 0 else None

    def cylinder_above(self, i: int) -> Optional[Cylinder]:
        return self.cylinders[i] if i < self.n - 1 else None

    def component_count(self) -> int:
        return sum(len(s) for s in self.slices)

    def to_dict(self) -> Dict[str, Any]:
        return {"crit": list(self.crit),
                "slices": [list(s) for s in self.slices],
                "cylinders": [c.to_dict() for c in self.cylinders]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CombinatorialTelescope":
        cylinders = [Cylinder(tuple(c["labels"]), c.get("lower", {}), c.get("upper", {}))
                     for c in data.get("cylinders", [])]
        return cls(tuple(data["crit"]), tuple(tuple(s) for s in data["slices"]), tuple(cylinders))

    def summary(self) -> str:
        sizes = "/".join(str(len(s)) for s in self.slices)
        return f"telescope with {self.n} critical value(s), slice sizes {sizes}"


def replace_value(crit: Sequence[float], i: int, values: List[float]) -> Tuple[float, ...]:
    """Critical values with position i replaced by a (possibly empty) list."""
    return tuple(crit[:i]) + tuple(values) + tuple(crit[i + 1:])
