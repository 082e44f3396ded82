"""
Extended filtration of a vertex function, realized on the cone over the complex.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .models import Simplex, SimplicialComplex2, VertexFunction, facets

logger = logging.getLogger(__name__)

ORDINARY = "ordinary"
RELATIVE = "relative"


@dataclass(frozen=True)
class FiltrationEntry:
    """A simplex of the complex (ordinary) or its cone with the apex (relative)."""
    simplex: Simplex
    phase: str

    @property
    def dim(self) -> int:
        """Dimension of the entry in the coned complex."""
        if self.phase == RELATIVE:
            return len(self.simplex)
        return len(self.simplex) - 1


APEX = FiltrationEntry((), RELATIVE)


@dataclass
class Filtration:
    """
    Ordered entries of the extended filtration.

    Index 0 is the cone apex. Ordinary entries follow in lower-star order,
    relative entries (cones over simplices) in upper-star order.
    """
    entries: List[FiltrationEntry]
    function: VertexFunction
    index: Dict[FiltrationEntry, int] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {entry: i for i, entry in enumerate(self.entries)}

    def __len__(self) -> int:
        return len(self.entries)

    def boundary(self, position: int) -> List[int]:
        """Row indices of the boundary column of an entry."""
        entry = self.entries[position]
        if entry == APEX:
            return []
        if entry.phase == ORDINARY:
            return [self.index[FiltrationEntry(face, ORDINARY)] for face in facets(entry.simplex)]
        rows = [self.index[FiltrationEntry(entry.simplex, ORDINARY)]]
        if len(entry.simplex) == 1:
            rows.append(self.index[APEX])
        else:
            rows.extend(self.index[FiltrationEntry(face, RELATIVE)] for face in facets(entry.simplex))
        return rows

    def up_value(self, position: int) -> float:
        return max(self.function[v] for v in self.entries[position].simplex)

    def down_value(self, position: int) -> float:
        return min(self.function[v] for v in self.entries[position].simplex)


def build_extended_filtration(complex_: SimplicialComplex2, function: VertexFunction,
                              perturb: bool = False) -> Filtration:
    """
    Order the coned complex for extended persistence.

    Raises:
        NonGenericValues: On tied values without perturbation
    """
    ranks = function.ranks(perturb)

    def lower_key(s: Simplex) -> Tuple:
        r = sorted((int(ranks[v]) for v in s), reverse=True)
        return (r[0], len(s), r)

    def upper_key(s: Simplex) -> Tuple:
        r = sorted(int(ranks[v]) for v in s)
        return (-r[0], len(s), [-x for x in r])

    simplices = list(complex_.simplices())
    entries = [APEX]
    entries.extend(FiltrationEntry(s, ORDINARY) for s in sorted(simplices, key=lower_key))
    entries.extend(FiltrationEntry(s, RELATIVE) for s in sorted(simplices, key=upper_key))

    logger.debug(f"Extended filtration with {len(entries)} entries over {len(simplices)} simplices")
    return Filtration(entries, function)
