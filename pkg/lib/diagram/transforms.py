"""
Merge, Split and Shift transforms on extended persistence diagrams.
Each mirrors the telescope operation of the same name.
"""
import logging

from ..errors import BandOccupied, InvalidEpsilon, InvalidParameters
from .models import DiagramPoint, ExtendedDiagram, PointKind

logger = logging.getLogger(__name__)


def merge_transform(diagram: ExtendedDiagram, a: float, b: float) -> ExtendedDiagram:
    """
    Snap every coordinate in [a, b] to (a + b) / 2.

    Ord and Rel points landing on the diagonal disappear; Ext- points landing
    on it become Ext+ points with birth == death.
    """
    if a > b:
        raise InvalidParameters(f"Merge needs a <= b, got [{a}, {b}]")
    middle = (a + b) / 2

    def snap(x: float) -> float:
        return middle if a <= x <= b else x

    points = []
    for p in diagram:
        birth, death = snap(p.birth), snap(p.death)
        if birth == death:
            if p.kind in (PointKind.ORD, PointKind.REL):
                continue
            if p.kind is PointKind.EXT_MINUS:
                points.append(DiagramPoint(birth, death, PointKind.EXT_PLUS, p.dim))
                continue
        points.append(p.moved(birth, death))

    removed = len(diagram) - len(points)
    if removed:
        logger.debug(f"Merge over [{a:g}, {b:g}] removed {removed} diagonal point(s)")
    return ExtendedDiagram(tuple(points))


def _check_band(diagram: ExtendedDiagram, lo: float, hi: float, reason: str):
    for p in diagram:
        for x in p.xy:
            if lo < x < hi:
                raise BandOccupied(f"{reason}: {p} has coordinate {x:g} in ({lo:g}, {hi:g})")


def split_transform(diagram: ExtendedDiagram, a_i: float, eps: float) -> ExtendedDiagram:
    """
    Move coordinates equal to a_i to a_i - eps or a_i + eps according to type.

    Births go down unless the point is relative; deaths go up unless the point is ordinary.
    """
    if eps <= 0:
        raise InvalidEpsilon(f"Split needs eps > 0, got {eps}")
    _check_band(diagram, a_i - eps, a_i, "Split band below the value is occupied")
    _check_band(diagram, a_i, a_i + eps, "Split band above the value is occupied")

    points = []
    for p in diagram:
        birth, death = p.birth, p.death
        if birth == a_i:
            birth = a_i + eps if p.kind is PointKind.REL else a_i - eps
        if death == a_i:
            death = a_i - eps if p.kind is PointKind.ORD else a_i + eps
        points.append(p.moved(birth, death))
    return ExtendedDiagram(tuple(points))


def shift_transform(diagram: ExtendedDiagram, a_i: float, eps: float) -> ExtendedDiagram:
    """Move coordinates equal to a_i to a_i + eps; eps may be negative."""
    lo, hi = sorted((a_i, a_i + eps))
    _check_band(diagram, lo, hi, "Shift band is occupied")

    target = a_i + eps
    return ExtendedDiagram(tuple(
        p.moved(target if p.birth == a_i else p.birth,
                target if p.death == a_i else p.death)
        for p in diagram))
