import math

import pytest

from lib.checks import random_cover, random_quotient_diagram
from lib.covers import DiagonalBand, StairKind, build_staircase, cover_from_pairs
from lib.diagram import DiagramPoint, ExtendedDiagram, PointKind, Variant, prune_signature
from lib.signature import (approximate_signature, bottleneck_distance,
                           complex_signature, convergence_sweep,
                           cover_discrepancy, graph_signature,
                           mapper_distance, mapper_distance_report,
                           max_staircase_hausdorff, staircase_bottleneck,
                           staircase_hausdorff)
from lib.telescope import telescope_to_graph

ORD, EXT_PLUS, EXT_MINUS = PointKind.ORD, PointKind.EXT_PLUS, PointKind.EXT_MINUS
TRUNK = DiagramPoint(0, 3, EXT_PLUS, 0)
HOLE = DiagramPoint(2, 1, EXT_MINUS, 1)


def diagram(*points):
    return ExtendedDiagram(tuple(points))


class TestStaircaseBottleneck:
    @pytest.fixture
    def theta(self, torus_cover):
        return build_staircase(torus_cover, StairKind.EXT_MINUS)

    def test_identical(self, theta):
        assert staircase_bottleneck(diagram(HOLE), diagram(HOLE), theta).cost == 0

    def test_deletion_pays_staircase_distance(self, theta):
        result = staircase_bottleneck(diagram(HOLE), diagram(), theta)
        assert result.cost == pytest.approx(0.4)
        assert result.unmatched[0][0] == HOLE

    def test_matching_beats_deletion(self, theta):
        moved = DiagramPoint(2.1, 0.9, EXT_MINUS, 1)
        result = staircase_bottleneck(diagram(HOLE), diagram(moved), theta)
        assert result.cost == pytest.approx(0.1)
        assert len(result.pairs) == 1 and not result.unmatched

    def test_empty_diagrams(self, theta):
        assert staircase_bottleneck(diagram(), diagram(), theta).cost == 0

    def test_empty_staircase_cannot_delete(self):
        from lib.covers import Staircase
        assert math.isinf(staircase_bottleneck(diagram(HOLE), diagram(), Staircase(())).cost)

    def test_result_dict(self, theta):
        payload = staircase_bottleneck(diagram(HOLE), diagram(), theta).to_dict()
        assert payload["pairs"] == []
        assert payload["unmatched"][0]["point"]["kind"] == "ExtMinus"

    def test_larger_region_costs_less(self, rng):
        for _ in range(30):
            cover = random_cover(rng)
            covered = cover.covered_range()
            lo, hi = covered.lo + 0.1, covered.hi - 0.1
            first = random_quotient_diagram(rng, lo, hi).subdiagram(ORD, 0)
            second = random_quotient_diagram(rng, lo, hi).subdiagram(ORD, 0)
            with_stairs = staircase_bottleneck(first, second, build_staircase(cover, StairKind.ORD))
            with_band = staircase_bottleneck(first, second, DiagonalBand(covered.lo, covered.hi))
            assert with_stairs.cost <= with_band.cost + 1e-9


class TestMapperDistance:
    def test_identical_signatures(self, torus_diagram, torus_cover):
        assert mapper_distance(torus_diagram, torus_diagram, torus_cover) == 0

    def test_hole_against_trunk_only(self, torus_diagram, torus_cover):
        assert mapper_distance(torus_diagram, diagram(TRUNK), torus_cover) == pytest.approx(0.4)

    def test_deleted_trunk_pays_ext_minus_distance(self, torus_diagram, torus_cover):
        report = mapper_distance_report(torus_diagram, diagram(), torus_cover)
        assert report.cost == pytest.approx(1.5)
        assert report.per_type["ord"] == 0 and report.per_type["rel"] == 0
        assert report.ext_plus_convention

    def test_mapper_variant_hides_hole(self, torus_diagram, torus_cover):
        assert mapper_distance(torus_diagram, diagram(TRUNK), torus_cover, Variant.MAPPER) == 0

    def test_report_dict(self, torus_diagram, torus_cover):
        payload = mapper_distance_report(torus_diagram, diagram(TRUNK), torus_cover).to_dict()
        assert set(payload) == {"cost", "variant", "per_type", "matching", "ext_plus_convention"}
        assert payload["variant"] == "multinerve"
        assert {(m["type"], m["dim"]) for m in payload["matching"]} == {("ext", 0), ("ext", 1)}

    def test_workers_do_not_change_cost(self, rng):
        for _ in range(10):
            cover = random_cover(rng)
            covered = cover.covered_range()
            first = random_quotient_diagram(rng, covered.lo, covered.hi, size=6)
            second = random_quotient_diagram(rng, covered.lo, covered.hi, size=6)
            serial = mapper_distance_report(first, second, cover, workers=1).cost
            assert mapper_distance_report(first, second, cover, workers=3).cost == serial

    def test_pseudometric(self, rng):
        for _ in range(20):
            cover = random_cover(rng)
            covered = cover.covered_range()
            a, b, c = (random_quotient_diagram(rng, covered.lo, covered.hi) for _ in range(3))
            ab, bc, ac = (mapper_distance(x, y, cover) for x, y in ((a, b), (b, c), (a, c)))
            assert ab == mapper_distance(b, a, cover)
            assert ac <= ab + bc + 1e-9

    def test_small_branch_is_unstable_only_for_classic_bottleneck(self, torus_cover):
        kept = prune_signature(diagram(TRUNK, DiagramPoint(0.5, 1.62, ORD, 0)), torus_cover)
        dropped = prune_signature(diagram(TRUNK, DiagramPoint(0.5, 1.58, ORD, 0)), torus_cover)
        assert len(kept) == 2 and dropped == diagram(TRUNK)
        assert mapper_distance(kept, dropped, torus_cover) == pytest.approx(0.02)
        assert bottleneck_distance(kept, dropped) == pytest.approx(0.56)


class TestCoverDiscrepancy:
    @pytest.fixture
    def shifted_cover(self):
        return cover_from_pairs([(-0.5, 2.6), (2.4, 3.5)])

    def test_same_cover(self, torus_diagram, torus_cover):
        assert cover_discrepancy(torus_diagram, torus_cover, torus_cover) == 0

    def test_empty_diagram(self, torus_cover, shifted_cover):
        assert cover_discrepancy(diagram(), torus_cover, shifted_cover) == 0

    def test_hole_hidden_by_one_cover(self, torus_diagram, torus_cover, shifted_cover):
        assert cover_discrepancy(torus_diagram, torus_cover, shifted_cover) == pytest.approx(0.4)

    def test_ext_minus_hausdorff(self, torus_cover, shifted_cover):
        assert staircase_hausdorff(torus_cover, shifted_cover, StairKind.EXT_MINUS) == pytest.approx(1.0)
        assert staircase_hausdorff(torus_cover, torus_cover, "ord") == pytest.approx(0.0)

    def test_bound_is_attained_at_a_corner(self):
        small, large = cover_from_pairs([(0, 2)]), cover_from_pairs([(0, 3)])
        corner = diagram(DiagramPoint(3, 0, EXT_MINUS, 1))
        bounds = max_staircase_hausdorff(small, large)
        assert bounds["ext"] == pytest.approx(1.0)
        assert bounds["max"] == pytest.approx(1.0)
        assert cover_discrepancy(corner, small, large) == pytest.approx(bounds["max"])

    def test_bounded_by_hausdorff(self, rng):
        for _ in range(30):
            first = random_cover(rng)
            second = random_cover(rng, start=float(rng.uniform(-0.5, 0.5)))
            lo = min(first.covered_range().lo, second.covered_range().lo)
            hi = max(first.covered_range().hi, second.covered_range().hi)
            d = random_quotient_diagram(rng, lo, hi)
            assert cover_discrepancy(d, first, second) <= max_staircase_hausdorff(first, second)["max"] + 1e-9


class TestPipelines:
    def test_complex_signature(self, path_graph, torus_cover):
        signature = complex_signature(*path_graph, torus_cover)
        assert signature.counts() == {(ORD, 0): 1, (EXT_PLUS, 0): 1, (PointKind.REL, 1): 1}

    def test_graph_signature(self, torus_telescope, torus_cover, torus_diagram):
        graph = telescope_to_graph(torus_telescope)
        assert graph_signature(graph, torus_cover) == torus_diagram
        assert graph_signature(graph, torus_cover, "mapper") == diagram(TRUNK)

    def test_circle_sample_is_close(self, circle100, circle_cover):
        reference = diagram(DiagramPoint(-1, 1, EXT_PLUS, 0), DiagramPoint(1, -1, EXT_MINUS, 1))
        signature = approximate_signature(circle100, 0.2, circle_cover)
        assert mapper_distance(signature, reference, circle_cover) <= 0.4

    def test_sparse_sample_gives_singletons(self, circle8, circle_cover):
        signature = approximate_signature(circle8, 0.1, circle_cover)
        assert len(signature) == 8
        assert all(p.kind is EXT_PLUS and p.birth == p.death for p in signature)

    def test_convergence_sweep(self, torus_telescope):
        rows = convergence_sweep(telescope_to_graph(torus_telescope), [2, 4, 8], 0.25, 0.5)
        assert [row["n"] for row in rows] == [2, 4, 8]
        assert all(row["equal"] and not row["degenerate"] for row in rows)
        granularity = [row["granularity"] for row in rows]
        assert granularity == sorted(granularity, reverse=True)
        assert rows[0]["min_span"] == 1

    def test_convergence_needs_padding(self, torus_telescope):
        from lib.errors import InvalidParameters
        with pytest.raises(InvalidParameters):
            convergence_sweep(telescope_to_graph(torus_telescope), [2], 0.25, 0)
