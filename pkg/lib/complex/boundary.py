"""
Sparse boundary matrix over Z/2 and its standard column reduction.
Columns store only the row indices of their ones.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

from .filtration import Filtration

logger = logging.getLogger(__name__)


@dataclass
class ReductionStats:
    column_additions: int = 0
    pivots_finalized: int = 0


@dataclass
class ReductionResult:
    """Persistence pairing read off a reduced matrix."""
    birth_to_death: Dict[int, int]
    unpaired: List[int]
    stats: ReductionStats = field(default_factory=ReductionStats)


class BoundaryMatrix:
    """Boundary matrix of a filtration with set-valued columns."""

    def __init__(self, columns: List[Set[int]]):
        self.columns = columns

    @classmethod
    def from_filtration(cls, filtration: Filtration) -> "BoundaryMatrix":
        return cls([set(filtration.boundary(j)) for j in range(len(filtration))])

    @property
    def size(self) -> int:
        return len(self.columns)

    def lowest_one(self, col: int) -> Optional[int]:
        column = self.columns[col]
        return max(column) if column else None

    def add_column(self, dst_col: int, src_col: int):
        # Z/2 addition is symmetric difference
        self.columns[dst_col] ^= self.columns[src_col]

    def reduce(self) -> ReductionResult:
        """Left-to-right reduction; each column ends with a unique lowest one or empty."""
        pivot_of_row: Dict[int, int] = {}
        stats = ReductionStats()

        for col in range(self.size):
            while True:
                row = self.lowest_one(col)
                if row is None:
                    break
                owner = pivot_of_row.get(row)
                if owner is None:
                    pivot_of_row[row] = col
                    stats.pivots_finalized += 1
                    logger.debug(f"column {col} pairs with row {row}")
                    break
                self.add_column(col, owner)
                stats.column_additions += 1

        paired = set(pivot_of_row) | set(pivot_of_row.values())
        unpaired = [j for j in range(self.size) if j not in paired]
        return ReductionResult(dict(pivot_of_row), unpaired, stats)
