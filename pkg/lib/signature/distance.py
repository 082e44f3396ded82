"""
Mapper-signature distance and cover discrepancy.

Points are grouped into three types: ordinary, extended and relative. Each
type is matched per dimension against the cover staircase that hides it.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from ..config import get_settings
from ..covers import GomicCover, StairKind, Staircase, build_staircase
from ..diagram import ExtendedDiagram, PointKind, Variant, ext_stair_kind
from .matching import MatchingResult, staircase_bottleneck

logger = logging.getLogger(__name__)

TYPE_GROUPS: Dict[str, Tuple[PointKind, ...]] = {
    "ord": (PointKind.ORD,),
    "ext": (PointKind.EXT_PLUS, PointKind.EXT_MINUS),
    "rel": (PointKind.REL,),
}


def type_staircases(cover: GomicCover, variant: Union[Variant, str] = Variant.MULTINERVE
                    ) -> Dict[str, Staircase]:
    """The staircase used for each point type."""
    return {
        "ord": build_staircase(cover, StairKind.ORD),
        "ext": build_staircase(cover, ext_stair_kind(Variant(variant))),
        "rel": build_staircase(cover, StairKind.REL),
    }


def _group_part(diagram: ExtendedDiagram, group: str, dim: Optional[int] = None) -> ExtendedDiagram:
    kinds = TYPE_GROUPS[group]
    return diagram.filter(lambda p: p.kind in kinds and (dim is None or p.dim == dim))


@dataclass
class DistanceReport:
    """Per-type costs and matchings behind one signature distance."""
    cost: float
    variant: Variant
    per_type: Dict[str, float] = field(default_factory=dict)
    matchings: List[Tuple[str, int, MatchingResult]] = field(default_factory=list)
    ext_plus_convention: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cost": self.cost,
            "variant": self.variant.value,
            "per_type": dict(self.per_type),
            "matching": [dict(type=group, dim=dim, **result.to_dict())
                         for group, dim, result in self.matchings],
            "ext_plus_convention": self.ext_plus_convention,
        }


def mapper_distance_report(diagram: ExtendedDiagram, other: ExtendedDiagram, cover: GomicCover,
                           variant: Union[Variant, str] = Variant.MULTINERVE,
                           workers: Optional[int] = None) -> DistanceReport:
    """
    Signature distance with its matchings.

    Ext+ points take part in the extended matching; when deleted they pay
    their distance to the closure of the below-diagonal staircase. The report
    flags when that convention was in play.
    """
    variant = Variant(variant)
    stairs = type_staircases(cover, variant)
    workers = workers or get_settings().workers

    jobs = []
    for group in TYPE_GROUPS:
        dims = sorted({p.dim for p in _group_part(diagram, group)}
                      | {p.dim for p in _group_part(other, group)})
        jobs.extend((group, dim) for dim in dims)

    def run(job: Tuple[str, int]) -> MatchingResult:
        group, dim = job
        return staircase_bottleneck(_group_part(diagram, group, dim),
                                    _group_part(other, group, dim), stairs[group])

    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    report = DistanceReport(0.0, variant, per_type={group: 0.0 for group in TYPE_GROUPS})
    for (group, dim), result in zip(jobs, results):
        report.matchings.append((group, dim, result))
        report.per_type[group] = max(report.per_type[group], result.cost)
    report.cost = max(report.per_type.values())
    report.ext_plus_convention = any(p.kind is PointKind.EXT_PLUS for p in diagram + other)

    logger.debug(f"Signature distance ({variant.value}): {report.cost:g} {report.per_type}")
    return report


def mapper_distance(diagram: ExtendedDiagram, other: ExtendedDiagram, cover: GomicCover,
                    variant: Union[Variant, str] = Variant.MULTINERVE) -> float:
    """Max of the per-type staircase bottleneck distances."""
    return mapper_distance_report(diagram, other, cover, variant).cost


def cover_discrepancy(diagram: ExtendedDiagram, first: GomicCover, second: GomicCover,
                      variant: Union[Variant, str] = Variant.MULTINERVE) -> float:
    """
    Largest distance, to the staircase missing it, of a point hidden by
    exactly one of the two covers; zero when no such point exists.
    """
    stairs_a = type_staircases(first, variant)
    stairs_b = type_staircases(second, variant)
    worst = 0.0
    for group in TYPE_GROUPS:
        for p in _group_part(diagram, group):
            in_a, dist_a = stairs_a[group].classify(p.xy)
            in_b, dist_b = stairs_b[group].classify(p.xy)
            if in_a != in_b:
                worst = max(worst, dist_a, dist_b)
    return worst
