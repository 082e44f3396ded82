"""
End-to-end signature pipelines.
"""
import logging
from typing import Any, Dict, List, Sequence, Union

from ..complex import SimplicialComplex2, VertexFunction, extended_persistence
from ..config import get_settings
from ..covers import GomicCover, uniform_cover
from ..diagram import ExtendedDiagram, Variant, prune_signature
from ..errors import DegenerateCover, InvalidParameters
from ..mapper import PointCloud, check_covered, rips_graph
from ..reeb import LeveledMultigraph, quotient_diagram

logger = logging.getLogger(__name__)


def complex_signature(complex_: SimplicialComplex2, function: VertexFunction, cover: GomicCover,
                      variant: Union[Variant, str] = Variant.MULTINERVE) -> ExtendedDiagram:
    """Signature of a PL function: its quotient part pruned by the cover staircases."""
    check_covered(function.values, cover)
    diagram = extended_persistence(complex_, function, perturb=get_settings().perturb_ties)
    return prune_signature(diagram, cover, variant)


def graph_signature(graph: LeveledMultigraph, cover: GomicCover,
                    variant: Union[Variant, str] = Variant.MULTINERVE) -> ExtendedDiagram:
    """Signature of the level function of a leveled multigraph."""
    return prune_signature(quotient_diagram(graph), cover, variant)


def approximate_signature(cloud: PointCloud, delta: float, cover: GomicCover,
                          variant: Union[Variant, str] = Variant.MULTINERVE) -> ExtendedDiagram:
    """
    Signature estimated from a sample: extended persistence of the PL
    interpolation over the Rips complex (up to triangles), pruned.

    Raises:
        UncoveredValue: If a point value lies outside the cover
        DegenerateCover: If a diagram coordinate falls on a cover endpoint
    """
    graph = rips_graph(cloud, delta)
    logger.info(f"Approximating signature from {len(cloud)} point(s) at delta={delta:g}")
    return complex_signature(graph.clique_complex(), cloud.function(), cover, variant)


def convergence_sweep(graph: LeveledMultigraph, ns: Sequence[int], overlap: float,
                      padding: float) -> List[Dict[str, Any]]:
    """
    MultiNerve signatures over uniform covers of growing resolution.

    Each row gives the cover granularity and whether the signature already
    equals the full quotient diagram. Covers with an endpoint on a diagram
    coordinate are reported as degenerate and skipped.
    """
    if padding <= 0:
        raise InvalidParameters(f"Padding must be positive, got {padding}")
    full = quotient_diagram(graph)
    lo, hi = min(graph.levels) - padding, max(graph.levels) + padding
    gap = min((p.span for p in full), default=float("inf"))

    rows = []
    for n in ns:
        cover = uniform_cover(lo, hi, n, overlap)
        row: Dict[str, Any] = {"n": n, "granularity": cover.granularity(), "min_span": gap}
        try:
            signature = prune_signature(full, cover, Variant.MULTINERVE)
        except DegenerateCover as e:
            logger.warning(f"Skipping n={n}: {e}")
            row.update(degenerate=True, equal=None, signature=None)
        else:
            row.update(degenerate=False, equal=signature == full.quotient_part(),
                       signature=signature.to_list())
        rows.append(row)

    logger.debug(f"Convergence sweep over {len(rows)} cover(s)")
    return rows
