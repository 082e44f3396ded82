import numpy as np
import pytest

from lib.covers import cover_from_pairs
from lib.complex import VertexFunction, extended_persistence
from lib.diagram import Variant, prune_signature
from lib.errors import InvalidParameters, SlabAttachmentAmbiguous, UncoveredValue
import lib.mapper.constructions as constructions
from lib.mapper import (Connectivity, PointCloud, RipsGraph, crossing_edges,
                        inclusion_check, mapper_continuous, mapper_discrete,
                        pi1_project, rips_graph)
from lib.reeb import LeveledMultigraph, leveled_isomorphic, quotient_diagram

CYCLE8 = tuple(sorted([(k, k + 1) for k in range(7)] + [(0, 7)]))


class TestPointCloud:
    def test_needs_exactly_one_geometry(self):
        with pytest.raises(InvalidParameters):
            PointCloud(np.zeros(2))
        with pytest.raises(InvalidParameters):
            PointCloud(np.zeros(2), coordinates=np.zeros((2, 1)), distances=np.zeros((2, 2)))

    def test_distance_matrix_is_checked(self):
        with pytest.raises(InvalidParameters):
            PointCloud(np.zeros(2), distances=np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_one_dimensional_coordinates(self):
        cloud = PointCloud([0, 1, 3], coordinates=[0, 1, 3])
        assert cloud.distance_matrix()[0, 2] == pytest.approx(3.0)


class TestRips:
    def test_circle(self, circle8):
        graph = rips_graph(circle8, 0.8)
        assert graph.edges == CYCLE8
        assert graph.one_skeleton().n_vertices == 8
        assert graph.clique_complex().triangles == ()

    def test_threshold_is_inclusive(self):
        cloud = PointCloud([0, 0], distances=np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert rips_graph(cloud, 1.0).edges == ((0, 1),)
        assert rips_graph(cloud, 0.99).edges == ()

    def test_negative_delta(self, circle8):
        with pytest.raises(InvalidParameters):
            rips_graph(circle8, -1)

    def test_crossing_edges(self):
        cover = cover_from_pairs([(0, 2), (1, 4), (3, 5)])
        graph = RipsGraph(4, ((0, 1), (2, 3)), 1.0)
        interval, intersection = crossing_edges(graph, [0.5, 4.5, 1.2, 1.8], cover)
        assert interval == {(0, 1)}
        assert intersection == {(0, 1)}


class TestMapperDiscrete:
    def test_vertex_witnesses(self, circle8, circle_cover):
        graph = rips_graph(circle8, 0.8)
        result = mapper_discrete(graph, circle8.values, circle_cover, Connectivity.VERTEX)
        assert result.levels == pytest.approx((-0.45, 0.45))
        assert result.edges == ((0, 1), (0, 1))

    def test_edge_witnesses(self, circle8, circle_cover):
        graph = rips_graph(circle8, 0.8)
        result = mapper_discrete(graph, circle8.values, circle_cover, "edge")
        assert result.edges == ((0, 1), (0, 1))
        assert result.betti_numbers() == (1, 1)

    def test_mapper_variant_is_simple(self, circle8, circle_cover):
        graph = rips_graph(circle8, 0.8)
        result = mapper_discrete(graph, circle8.values, circle_cover, variant=Variant.MAPPER)
        assert result.edges == ((0, 1),)

    def test_edge_witness_joins_split_intersection(self, circle_cover):
        graph = RipsGraph(2, ((0, 1),), 1.0)
        values = [-0.5, 0.5]
        assert mapper_discrete(graph, values, circle_cover, Connectivity.VERTEX).edges == ()
        assert mapper_discrete(graph, values, circle_cover, Connectivity.EDGE).edges == ((0, 1),)

    def test_uncovered_value(self, circle_cover):
        graph = RipsGraph(1, (), 1.0)
        with pytest.raises(UncoveredValue):
            mapper_discrete(graph, [2.0], circle_cover)

    def test_value_count(self, circle8, circle_cover):
        with pytest.raises(InvalidParameters):
            mapper_discrete(rips_graph(circle8, 0.8), [0.0], circle_cover)

    def test_ambiguous_intersection_component(self, monkeypatch):
        cover = cover_from_pairs([(0, 2), (1, 3)])
        original = constructions._components
        calls = []

        def glued(items, pairs):
            calls.append(items)
            if len(calls) <= len(cover):
                return original(items, pairs)
            return [frozenset(items)] if items else []

        monkeypatch.setattr(constructions, "_components", glued)
        with pytest.raises(SlabAttachmentAmbiguous, match="2 lower"):
            mapper_discrete(RipsGraph(2, (), 1.0), [1.4, 1.6], cover, Connectivity.VERTEX)


class TestMapperContinuous:
    def test_path(self, path_graph, torus_cover):
        graph = mapper_continuous(*path_graph, torus_cover)
        assert graph.levels == pytest.approx((0.55, 0.55, 2.45, 2.45))
        assert graph.edges == ((0, 2), (1, 2), (1, 3))

    def test_signature_counts(self, path_graph, torus_cover):
        expected = prune_signature(extended_persistence(*path_graph), torus_cover)
        for variant in Variant:
            graph = mapper_continuous(*path_graph, torus_cover, variant)
            assert quotient_diagram(graph).counts() == expected.counts()

    def test_matches_discrete_on_circle(self, circle8, circle_cover):
        graph = rips_graph(circle8, 0.8)
        continuous = mapper_continuous(graph.one_skeleton(), circle8.function(), circle_cover)
        discrete = mapper_discrete(graph, circle8.values, circle_cover)
        assert leveled_isomorphic(continuous, discrete)

    def test_uncovered_value(self, path_graph):
        with pytest.raises(UncoveredValue):
            mapper_continuous(*path_graph, cover_from_pairs([(-0.5, 1.6), (1.4, 2.5)]))


class TestInclusion:
    def test_circle_passes(self, circle8, circle_cover):
        report = inclusion_check(rips_graph(circle8, 0.8), circle8.values, circle_cover)
        assert report.passed
        assert report.interval_crossing == set()
        assert "vertex_equals_edge" in report.checks
        assert "edge_equals_continuous" in report.checks
        payload = report.to_dict()
        assert payload["passed"] is True
        assert set(payload["objects"]) == {
            "vertex_multinerve", "vertex_mapper", "edge_multinerve", "edge_mapper",
            "continuous_multinerve", "continuous_mapper"}

    def test_random_clouds_keep_inclusions(self, rng):
        from lib.checks import random_cover, random_point_cloud
        for _ in range(15):
            cover = random_cover(rng)
            cloud = random_point_cloud(rng, cover)
            report = inclusion_check(rips_graph(cloud, 0.4), cloud.values, cover)
            assert report.checks["vertex_in_edge_multinerve"]
            assert report.checks["vertex_mapper_is_support"]
            assert report.checks["edge_mapper_betti"]

    def test_triangle_fill_changes_multinerve(self):
        # the triangle joins the band that edge (0, 1) crosses
        values = [3.874, 6.640, 5.542]
        cover = cover_from_pairs([(1.168, 2.587), (1.689, 4.361), (3.866, 6.240), (5.047, 7.630)])
        graph = RipsGraph(3, ((0, 1), (0, 2), (1, 2)), 1.0)
        function = VertexFunction(tuple(values))
        on_skeleton = mapper_continuous(graph.one_skeleton(), function, cover, Variant.MULTINERVE)
        on_flag = mapper_continuous(graph.clique_complex(), function, cover, Variant.MULTINERVE)
        assert on_skeleton.n_edges == 3
        assert on_flag.n_edges == 2
        assert not leveled_isomorphic(on_skeleton, on_flag)

        report = inclusion_check(graph, values, cover)
        assert leveled_isomorphic(report.objects["continuous_multinerve"], on_skeleton)


class TestProjection:
    def test_double_edge_collapses(self):
        projected = pi1_project(LeveledMultigraph((0.55, 2.45), ((0, 1), (0, 1))))
        assert projected.levels == (0.55, 2.45)
        assert projected.edges == ((0, 1),)
        assert projected.betti_numbers() == (1, 0)

    def test_simple_graph_is_unchanged(self):
        graph = LeveledMultigraph((0, 1, 1, 2), ((0, 1), (0, 2), (1, 3), (2, 3)))
        assert pi1_project(graph) == graph

    def test_mapper_is_projected_multinerve(self, path_graph, torus_cover):
        multinerve = mapper_continuous(*path_graph, torus_cover)
        assert mapper_continuous(*path_graph, torus_cover, Variant.MAPPER) == pi1_project(multinerve)
