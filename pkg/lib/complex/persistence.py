"""
Extended persistence of a PL function on a simplicial complex.
"""
import logging
from typing import List

from ..diagram import DiagramPoint, ExtendedDiagram, PointKind
from ..errors import InvalidParameters
from .boundary import BoundaryMatrix
from .filtration import ORDINARY, build_extended_filtration
from .models import SimplicialComplex2, VertexFunction

logger = logging.getLogger(__name__)


def extended_persistence(complex_: SimplicialComplex2, function: VertexFunction,
                         perturb: bool = False) -> ExtendedDiagram:
    """
    Compute the extended persistence diagram of the lower-star extension of f.

    Ordinary pairs give Ord points at (birth value, death value); relative
    pairs give Rel points one dimension up; mixed pairs give extended points
    (Ext+ when the class is born at or below its death value, Ext- otherwise).
    Pairs with equal coordinates are dropped for Ord and Rel.

    Args:
        complex_: Complex of dimension <= 2
        function: One value per vertex
        perturb: Break value ties by vertex index instead of failing

    Raises:
        NonGenericValues: On tied values without perturbation
    """
    if len(function) != complex_.n_vertices:
        raise InvalidParameters(
            f"Function has {len(function)} values for {complex_.n_vertices} vertices")

    filtration = build_extended_filtration(complex_, function, perturb)
    result = BoundaryMatrix.from_filtration(filtration).reduce()

    points: List[DiagramPoint] = []
    for birth, death in result.birth_to_death.items():
        birth_entry = filtration.entries[birth]
        death_entry = filtration.entries[death]

        if birth_entry.phase == ORDINARY and death_entry.phase == ORDINARY:
            b, d = filtration.up_value(birth), filtration.up_value(death)
            if b != d:
                points.append(DiagramPoint(b, d, PointKind.ORD, birth_entry.dim))
        elif birth_entry.phase == ORDINARY:
            b, d = filtration.up_value(birth), filtration.down_value(death)
            kind = PointKind.EXT_PLUS if b <= d else PointKind.EXT_MINUS
            points.append(DiagramPoint(b, d, kind, birth_entry.dim))
        else:
            b, d = filtration.down_value(birth), filtration.down_value(death)
            if b != d:
                points.append(DiagramPoint(b, d, PointKind.REL, birth_entry.dim))

    diagram = ExtendedDiagram(tuple(points))
    logger.debug(f"Extended persistence: {len(diagram)} point(s), "
                 f"{result.stats.column_additions} column additions")
    return diagram
