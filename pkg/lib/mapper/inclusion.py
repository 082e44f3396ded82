"""
Inclusion diagram among the discrete and continuous Mapper constructions.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Set, Tuple

from ..complex import VertexFunction
from ..covers import GomicCover
from ..diagram import Variant
from ..reeb import LeveledMultigraph, leveled_isomorphic
from .constructions import Connectivity, mapper_continuous, mapper_discrete
from .models import RipsGraph
from .rips import crossing_edges

logger = logging.getLogger(__name__)


@dataclass
class InclusionReport:
    """All constructions for one instance, the checks run on them and any violations."""
    objects: Dict[str, LeveledMultigraph]
    interval_crossing: Set[Tuple[int, int]]
    intersection_crossing: Set[Tuple[int, int]]
    checks: Dict[str, bool] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, name: str, ok: bool):
        self.checks[name] = ok
        if not ok:
            self.violations.append(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "interval_crossing": sorted(list(e) for e in self.interval_crossing),
            "intersection_crossing": sorted(list(e) for e in self.intersection_crossing),
            "checks": dict(self.checks),
            "violations": list(self.violations),
            "objects": {name: g.to_dict() for name, g in self.objects.items()},
        }


def _is_subgraph(small: LeveledMultigraph, large: LeveledMultigraph) -> bool:
    """Same nodes, and every edge multiplicity of small is at most that of large."""
    if small.levels != large.levels:
        return False
    large_counts = large.edge_counts()
    return all(large_counts[e] >= m for e, m in small.edge_counts().items())


def inclusion_check(graph: RipsGraph, values: Sequence[float], cover: GomicCover) -> InclusionReport:
    """
    Build the four discrete constructions and the continuous ones, then check
    the inclusions between them and the coincidences the crossing edges allow.
    """
    interval_crossing, intersection_crossing = crossing_edges(graph, values, cover)
    function = VertexFunction(tuple(float(v) for v in values))
    flag = graph.clique_complex()
    skeleton = graph.one_skeleton()

    objects = {
        "vertex_multinerve": mapper_discrete(graph, values, cover, Connectivity.VERTEX, Variant.MULTINERVE),
        "vertex_mapper": mapper_discrete(graph, values, cover, Connectivity.VERTEX, Variant.MAPPER),
        "edge_multinerve": mapper_discrete(graph, values, cover, Connectivity.EDGE, Variant.MULTINERVE),
        "edge_mapper": mapper_discrete(graph, values, cover, Connectivity.EDGE, Variant.MAPPER),
        "continuous_multinerve": mapper_continuous(skeleton, function, cover, Variant.MULTINERVE),
        "continuous_mapper": mapper_continuous(flag, function, cover, Variant.MAPPER),
    }
    report = InclusionReport(objects, interval_crossing, intersection_crossing)

    discrete = [objects[name] for name in
                ("vertex_multinerve", "vertex_mapper", "edge_multinerve", "edge_mapper")]
    report.record("shared_nodes", all(g.levels == discrete[0].levels for g in discrete))
    report.record("vertex_in_edge_multinerve",
                  _is_subgraph(objects["vertex_multinerve"], objects["edge_multinerve"]))
    report.record("vertex_in_edge_mapper",
                  _is_subgraph(objects["vertex_mapper"], objects["edge_mapper"]))
    for witness in ("vertex", "edge"):
        multinerve, mapper = objects[f"{witness}_multinerve"], objects[f"{witness}_mapper"]
        report.record(f"{witness}_mapper_is_support",
                      set(mapper.edges) == set(multinerve.edges)
                      and max(Counter(mapper.edges).values(), default=1) == 1)
        report.record(f"{witness}_mapper_betti",
                      mapper.betti_numbers()[1] <= multinerve.betti_numbers()[1])

    if not intersection_crossing:
        report.record("vertex_equals_edge",
                      leveled_isomorphic(objects["vertex_multinerve"], objects["edge_multinerve"]))
    if not interval_crossing:
        report.record("edge_equals_continuous",
                      leveled_isomorphic(objects["edge_multinerve"], objects["continuous_multinerve"]))
        report.record("edge_mapper_equals_continuous",
                      leveled_isomorphic(objects["edge_mapper"], objects["continuous_mapper"]))

    logger.debug(f"Inclusion check: {len(report.checks)} check(s), {len(report.violations)} violation(s)")
    return report
