"""
Staircase pruning of quotient diagrams into Mapper signatures.
Also provides the feature dictionary that reads a quotient diagram as trunks, branches and holes.
"""
import logging
from typing import Any, Dict, List, Union

from ..covers import GomicCover, StairKind, build_staircase
from ..errors import DegenerateCover
from .models import ExtendedDiagram, PointKind, Variant

logger = logging.getLogger(__name__)

QUOTIENT_CLASSES = {(PointKind.ORD, 0), (PointKind.EXT_PLUS, 0),
                    (PointKind.EXT_MINUS, 1), (PointKind.REL, 1)}


def ext_stair_kind(variant: Variant) -> StairKind:
    """Staircase that prunes Ext- points for a construction variant."""
    return StairKind.EXT if Variant(variant) is Variant.MAPPER else StairKind.EXT_MINUS


def prune_signature(diagram: ExtendedDiagram, cover: GomicCover,
                    variant: Union[Variant, str] = Variant.MULTINERVE) -> ExtendedDiagram:
    """
    Remove the diagram points hidden by the cover's staircases.

    Full diagrams are first cut down to their quotient part. Ext+ points are
    never removed.

    Raises:
        DegenerateCover: If a point coordinate equals a cover endpoint
    """
    variant = Variant(variant)
    quotient = diagram.quotient_part()

    endpoints = set(cover.endpoints())
    for p in quotient:
        if p.birth in endpoints or p.death in endpoints:
            raise DegenerateCover(f"{p} has a coordinate on a cover endpoint")

    stairs = {
        PointKind.ORD: build_staircase(cover, StairKind.ORD),
        PointKind.REL: build_staircase(cover, StairKind.REL),
        PointKind.EXT_MINUS: build_staircase(cover, ext_stair_kind(variant)),
    }
    signature = quotient.filter(
        lambda p: p.kind not in stairs or not stairs[p.kind].contains(p.xy))

    logger.debug(f"Pruned {len(quotient) - len(signature)} of {len(quotient)} "
                 f"point(s) for the {variant.value} signature")
    return signature


def describe_features(diagram: ExtendedDiagram) -> List[Dict[str, Any]]:
    """
    Read a quotient diagram as a list of graph features.

    Ext+_0 points are trunks, Ord_0 points downward branches, Rel_1 points
    upward branches and Ext-_1 points holes; each comes with its vertical span.
    """
    names = {
        (PointKind.EXT_PLUS, 0): "trunk",
        (PointKind.ORD, 0): "downward_branch",
        (PointKind.REL, 1): "upward_branch",
        (PointKind.EXT_MINUS, 1): "hole",
    }
    features = []
    for p in diagram:
        name = names.get((p.kind, p.dim))
        if name is None:
            continue
        features.append({
            "feature": name,
            "span": [min(p.xy), max(p.xy)],
            "height": p.span,
            "point": p.to_dict(),
        })
    return features
