"""
Randomized verification sweeps for the telescope, Mapper and signature results.

Each sweep draws its instances from one numpy Generator and returns a
CheckOutcome; a failure is a counterexample, kept in the outcome for replay.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from ..config import get_project_config, get_settings
from ..covers import Staircase, uniform_cover
from ..diagram import (ExtendedDiagram, merge_transform, prune_signature,
                       shift_transform, split_transform)
from ..errors import InvalidParameters
from ..mapper import inclusion_check, rips_graph
from ..reeb import leveled_isomorphic, quotient_diagram
from ..signature import (complex_signature, cover_discrepancy,
                         mapper_distance, max_staircase_hausdorff,
                         staircase_bottleneck)
from ..telescope import (DOWN_FORK, UP_FORK, CombinatorialTelescope,
                         canonicalize, fork_classify, merge_op,
                         multinerve_of_telescope, shift_op, split_op,
                         telescope_to_graph)
from ..utils.logging_config import create_performance_logger
from .generators import (random_cover, random_graph_values,
                         random_point_cloud, random_quotient_diagram,
                         random_telescope)

logger = logging.getLogger(__name__)

MAX_EXAMPLES = 5


@dataclass
class CheckOutcome:
    """Result of one sweep."""
    name: str
    trials: int = 0
    failures: int = 0
    seconds: float = 0.0
    examples: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, **details):
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(details)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "trials": self.trials, "failures": self.failures,
                "seconds": round(self.seconds, 3), "passed": self.passed,
                "examples": self.examples}


def _diagram(telescope: CombinatorialTelescope) -> ExtendedDiagram:
    return quotient_diagram(telescope_to_graph(telescope))


def _fraction(rng: np.random.Generator) -> float:
    return float(rng.uniform(0.1, 0.9))


def _gaps(telescope: CombinatorialTelescope, i: int):
    below, above = telescope.neighbors(i)
    value = telescope.crit[i]
    return (value - below if below is not None else 1.0,
            above - value if above is not None else 1.0)


# Diagram transforms against telescope operations

def check_merge_transform(rng: np.random.Generator, trials: int) -> CheckOutcome:
    outcome = CheckOutcome("merge_transform")
    for _ in range(trials):
        telescope = random_telescope(rng)
        first, last = telescope.support()
        a, b = sorted(float(x) for x in rng.uniform(first, last, size=2))
        expected = merge_transform(_diagram(telescope), a, b).drop_diagonal_cycles()
        actual = _diagram(merge_op(telescope, a, b))
        outcome.record(actual == expected, telescope=telescope.to_dict(), a=a, b=b)
    return outcome


def check_split_transform(rng: np.random.Generator, trials: int) -> CheckOutcome:
    outcome = CheckOutcome("split_transform")
    for _ in range(trials):
        telescope = random_telescope(rng)
        i = int(rng.integers(telescope.n))
        a_i = telescope.crit[i]
        eps = _fraction(rng) * min(_gaps(telescope, i))
        expected = split_transform(_diagram(telescope), a_i, eps)
        actual = _diagram(split_op(telescope, a_i, eps))
        outcome.record(actual == expected, telescope=telescope.to_dict(), a_i=a_i, eps=eps)
    return outcome


def check_shift_transform(rng: np.random.Generator, trials: int) -> CheckOutcome:
    outcome = CheckOutcome("shift_transform")
    for _ in range(trials):
        telescope = random_telescope(rng)
        i = int(rng.integers(telescope.n))
        a_i = telescope.crit[i]
        below, above = _gaps(telescope, i)
        eps = _fraction(rng) * above if rng.random() < 0.5 else -_fraction(rng) * below
        expected = shift_transform(_diagram(telescope), a_i, eps)
        actual = _diagram(shift_op(telescope, a_i, eps))
        outcome.record(actual == expected, telescope=telescope.to_dict(), a_i=a_i, eps=eps)
    return outcome


# Invariance of the MultiNerve Mapper under cover-compatible operations

def _invariance(name: str, rng: np.random.Generator, trials: int,
                propose: Callable[[np.random.Generator, CombinatorialTelescope, Any],
                                  Optional[CombinatorialTelescope]]) -> CheckOutcome:
    """Draw (telescope, cover) pairs until `trials` of them admit a legal operation."""
    outcome = CheckOutcome(name)
    attempts = 0
    while outcome.trials < trials and attempts < 50 * trials:
        attempts += 1
        cover = random_cover(rng)
        telescope = random_telescope(rng, cover)
        moved = propose(rng, telescope, cover)
        if moved is None:
            continue
        same = leveled_isomorphic(multinerve_of_telescope(telescope, cover),
                                  multinerve_of_telescope(moved, cover))
        outcome.record(same, telescope=telescope.to_dict(), cover=cover.to_list(),
                       moved=moved.to_dict())
    if outcome.trials < trials:
        logger.warning(f"{name}: only {outcome.trials} legal case(s) in {attempts} attempt(s)")
    return outcome


def _propose_merge(rng, telescope, cover):
    region = cover.regions()[int(rng.integers(len(cover.regions())))]
    first, last = telescope.support()
    lo, hi = max(region.interval.lo, first), min(region.interval.hi, last)
    if not lo < hi:
        return None
    a, b = sorted(float(x) for x in rng.uniform(lo, hi, size=2))
    if not (region.interval.contains(a) and region.interval.contains(b)):
        return None
    return merge_op(telescope, a, b)


def _propose_split(rng, telescope, cover):
    endpoints = cover.endpoints()
    crit = telescope.crit
    options = []
    for i, a_i in enumerate(crit):
        below = max(e for e in endpoints if e < a_i)
        above = min(e for e in endpoints if e > a_i)
        if (i == 0 or crit[i - 1] < below) and (i == len(crit) - 1 or above < crit[i + 1]):
            options.append((a_i, min(a_i - below, above - a_i)))
    if not options:
        return None
    a_i, room = options[int(rng.integers(len(options)))]
    return split_op(telescope, a_i, _fraction(rng) * room)


def _propose_up_shift(rng, telescope, cover):
    endpoints = cover.endpoints()
    crit = telescope.crit
    options = []
    for k in range(len(cover) - 1):
        band = cover.intersection(k)
        inside = [i for i, a in enumerate(crit) if band.contains(a)]
        if not inside:
            continue
        i = inside[-1]
        if UP_FORK not in fork_classify(telescope, crit[i]):
            continue
        ceiling = min(e for e in endpoints if e > band.hi)
        if i + 1 < len(crit):
            ceiling = min(ceiling, crit[i + 1])
        if ceiling > band.hi:
            options.append((crit[i], band.hi - crit[i], ceiling - crit[i]))
    if not options:
        return None
    a_i, lo, hi = options[int(rng.integers(len(options)))]
    return shift_op(telescope, a_i, lo + _fraction(rng) * (hi - lo))


def _propose_down_shift(rng, telescope, cover):
    endpoints = cover.endpoints()
    crit = telescope.crit
    options = []
    for k in range(len(cover) - 1):
        band = cover.intersection(k)
        inside = [i for i, a in enumerate(crit) if band.contains(a)]
        if not inside:
            continue
        i = inside[0]
        if DOWN_FORK not in fork_classify(telescope, crit[i]):
            continue
        floor = max(e for e in endpoints if e < band.lo)
        if i > 0:
            floor = max(floor, crit[i - 1])
        if floor < band.lo:
            options.append((crit[i], floor - crit[i], band.lo - crit[i]))
    if not options:
        return None
    a_i, lo, hi = options[int(rng.integers(len(options)))]
    return shift_op(telescope, a_i, lo + _fraction(rng) * (hi - lo))


def check_invariance_merge(rng, trials):
    return _invariance("invariance_merge", rng, trials, _propose_merge)


def check_invariance_split(rng, trials):
    return _invariance("invariance_split", rng, trials, _propose_split)


def check_invariance_up_shift(rng, trials):
    return _invariance("invariance_up_shift", rng, trials, _propose_up_shift)


def check_invariance_down_shift(rng, trials):
    return _invariance("invariance_down_shift", rng, trials, _propose_down_shift)


# Canonical form

def check_structure(rng: np.random.Generator, trials: int) -> CheckOutcome:
    """MultiNerve Mapper of a telescope is the graph of its canonical form."""
    outcome = CheckOutcome("structure")
    for _ in range(trials):
        cover = random_cover(rng)
        telescope = random_telescope(rng, cover)
        canonical = canonicalize(telescope, cover)
        same = leveled_isomorphic(multinerve_of_telescope(telescope, cover),
                                  telescope_to_graph(canonical))
        outcome.record(same, telescope=telescope.to_dict(), cover=cover.to_list())
    return outcome


def check_matching(rng: np.random.Generator, trials: int) -> CheckOutcome:
    """
    Canonical quotient diagram against the pruned original: equal class
    counts, and a perfect matching moving no point farther than the longest
    cover interval.
    """
    outcome = CheckOutcome("matching")
    tolerance = get_settings().tolerance
    no_deletions = Staircase(())
    for _ in range(trials):
        cover = random_cover(rng)
        telescope = random_telescope(rng, cover)
        signature = prune_signature(_diagram(telescope), cover)
        canonical = _diagram(canonicalize(telescope, cover)).quotient_part()

        ok = signature.counts() == canonical.counts()
        cost = 0.0
        if ok:
            for kind, dim in signature.classes():
                cost = max(cost, staircase_bottleneck(signature.subdiagram(kind, dim),
                                                      canonical.subdiagram(kind, dim),
                                                      no_deletions).cost)
            ok = cost <= cover.granularity() + tolerance
        outcome.record(ok, telescope=telescope.to_dict(), cover=cover.to_list(), cost=cost)
    return outcome


# Discrete Mapper

def check_coincidence(rng: np.random.Generator, trials: int) -> CheckOutcome:
    """Inclusions and crossing-edge coincidences between the Mapper constructions."""
    outcome = CheckOutcome("coincidence")
    for _ in range(trials):
        cover = random_cover(rng)
        cloud = random_point_cloud(rng, cover)
        delta = float(rng.uniform(0.1, 0.8))
        graph = rips_graph(cloud, delta)
        report = inclusion_check(graph, cloud.values, cover)
        outcome.record(report.passed, violations=report.violations, cover=cover.to_list(),
                       values=cloud.values.tolist(), coordinates=cloud.coordinates.tolist(),
                       delta=delta)
    return outcome


# Signature metrics

def check_stability(rng: np.random.Generator, trials: int) -> CheckOutcome:
    """Signature distance never exceeds the sup-norm of a value perturbation."""
    outcome = CheckOutcome("stability")
    tolerance = get_settings().tolerance
    for _ in range(trials):
        complex_, function = random_graph_values(rng)
        values = np.array(function.values)
        cover = uniform_cover(float(values.min()) - 0.5, float(values.max()) + 0.5,
                              int(rng.integers(1, 7)), float(rng.uniform(0.1, 0.4)))
        delta = float(rng.choice(np.linspace(0.01, 0.1, 10)))
        noise = rng.uniform(-delta, delta, size=len(values))
        noise[int(rng.integers(len(values)))] = delta * rng.choice([-1.0, 1.0])
        perturbed = function.of(values + noise)

        distance = mapper_distance(complex_signature(complex_, function, cover),
                                   complex_signature(complex_, perturbed, cover), cover)
        outcome.record(distance <= delta + tolerance, edges=[list(e) for e in complex_.edges],
                       values=values.tolist(), noise=noise.tolist(), cover=cover.to_list(),
                       distance=distance, delta=delta)
    return outcome


def check_discrepancy(rng: np.random.Generator, trials: int) -> CheckOutcome:
    """Cover discrepancy is bounded by the largest staircase Hausdorff distance."""
    outcome = CheckOutcome("discrepancy")
    tolerance = get_settings().tolerance
    for _ in range(trials):
        first = random_cover(rng)
        second = random_cover(rng, start=float(rng.uniform(-0.5, 0.5)))
        lo = min(first.covered_range().lo, second.covered_range().lo)
        hi = max(first.covered_range().hi, second.covered_range().hi)
        diagram = random_quotient_diagram(rng, lo, hi)
        discrepancy = cover_discrepancy(diagram, first, second)
        bound = max_staircase_hausdorff(first, second)["max"]
        outcome.record(discrepancy <= bound + tolerance, first=first.to_list(),
                       second=second.to_list(), diagram=diagram.to_list(),
                       discrepancy=discrepancy, bound=bound)
    return outcome


CHECKS: Dict[str, Callable[[np.random.Generator, int], CheckOutcome]] = {
    "merge_transform": check_merge_transform,
    "split_transform": check_split_transform,
    "shift_transform": check_shift_transform,
    "invariance_merge": check_invariance_merge,
    "invariance_split": check_invariance_split,
    "invariance_up_shift": check_invariance_up_shift,
    "invariance_down_shift": check_invariance_down_shift,
    "structure": check_structure,
    "matching": check_matching,
    "coincidence": check_coincidence,
    "stability": check_stability,
    "discrepancy": check_discrepancy,
}


def default_trials(name: str) -> int:
    """Sweep size from the project configuration."""
    checks = get_project_config().checks
    if name.endswith("_transform"):
        return checks.transform_trials
    if name.startswith("invariance"):
        return checks.invariance_trials
    return {
        "structure": checks.structure_trials,
        "matching": checks.structure_trials,
        "coincidence": checks.coincidence_trials,
        "stability": checks.stability_trials,
        "discrepancy": checks.discrepancy_trials,
    }[name]


@dataclass
class CheckReport:
    seed: int
    outcomes: List[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def to_dict(self) -> Dict[str, Any]:
        return {"seed": self.seed, "passed": self.passed,
                "checks": [o.to_dict() for o in self.outcomes]}


def run_checks(names: Optional[Sequence[str]] = None, seed: Optional[int] = None,
               trials: Optional[int] = None) -> CheckReport:
    """
    Run the named sweeps (all by default), each from its own generator
    seeded with `seed`, so a single sweep replays identically on its own.
    """
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    names = list(CHECKS) if not names else list(names)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise InvalidParameters(f"Unknown check(s): {', '.join(unknown)}")

    perf = create_performance_logger(settings.log_dir, settings.enable_file_logging)
    report = CheckReport(seed)
    for name in names:
        count = default_trials(name) if trials is None else trials
        started = time.perf_counter()
        outcome = CHECKS[name](np.random.default_rng(seed), count)
        outcome.seconds = time.perf_counter() - started
        perf.info(f"{name}: {outcome.trials} trial(s) in {outcome.seconds:.2f}s")
        if outcome.passed:
            logger.info(f"Check {name} passed ({outcome.trials} trial(s))")
        else:
            logger.error(f"Check {name} failed {outcome.failures}/{outcome.trials}")
        report.outcomes.append(outcome)
    return report
