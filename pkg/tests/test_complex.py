import numpy as np
import pytest

from lib.checks import random_graph_values
from lib.complex import (SimplicialComplex2, VertexFunction, betti_numbers,
                         clique_complex, extended_persistence, gf2_rank,
                         levelset_components)
from lib.covers import Interval
from lib.diagram import DiagramPoint, ExtendedDiagram, PointKind
from lib.errors import InvalidParameters, NonGenericValues
from tests.oracle import ordinary_count

ORD, REL = PointKind.ORD, PointKind.REL
EXT_PLUS, EXT_MINUS = PointKind.EXT_PLUS, PointKind.EXT_MINUS


def diagram(*points):
    return ExtendedDiagram(tuple(DiagramPoint(*p) for p in points))


class TestModels:
    def test_triangle_needs_its_edges(self):
        with pytest.raises(InvalidParameters):
            SimplicialComplex2(3, ((0, 1), (1, 2)), ((0, 1, 2),))

    def test_unknown_vertex(self):
        with pytest.raises(InvalidParameters):
            SimplicialComplex2(2, ((0, 2),))

    def test_simplices_are_normalized(self):
        complex_ = SimplicialComplex2(3, ((2, 1), (1, 0), (0, 2)), ((2, 0, 1),))
        assert complex_.edges == ((0, 1), (0, 2), (1, 2))
        assert complex_.triangles == ((0, 1, 2),)
        assert complex_.dimension == 2
        assert len(complex_) == 7

    def test_clique_complex(self):
        complex_ = clique_complex(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert len(complex_.triangles) == 4

    def test_function_ranks(self):
        function = VertexFunction((0, 1, 2, 1))
        with pytest.raises(NonGenericValues):
            function.ranks()
        assert list(function.ranks(perturb=True)) == [0, 1, 3, 2]


class TestExtendedPersistence:
    def test_path(self, path_graph):
        assert extended_persistence(*path_graph) == diagram(
            (1, 2, ORD, 0), (0, 3, EXT_PLUS, 0), (2, 1, REL, 1))

    def test_tied_cycle_needs_perturbation(self, square_cycle):
        with pytest.raises(NonGenericValues):
            extended_persistence(*square_cycle)

    def test_cycle(self, square_cycle):
        assert extended_persistence(*square_cycle, perturb=True) == diagram(
            (0, 2, EXT_PLUS, 0), (2, 0, EXT_MINUS, 1))

    def test_octahedron(self, octahedron):
        assert extended_persistence(*octahedron) == diagram(
            (-1, 1, EXT_PLUS, 0), (1, -1, EXT_MINUS, 2))

    def test_torus_extended_points(self, seven_vertex_torus):
        d = extended_persistence(*seven_vertex_torus)
        extended = [p for p in d if p.kind.is_extended]
        assert sorted(p.dim for p in extended) == [0, 1, 1, 2]
        assert DiagramPoint(0, 6, EXT_PLUS, 0) in extended
        assert DiagramPoint(6, 0, EXT_MINUS, 2) in extended

    def test_function_size_mismatch(self, path_graph):
        complex_, _ = path_graph
        with pytest.raises(InvalidParameters):
            extended_persistence(complex_, VertexFunction((0, 1)))

    def test_negation_symmetry(self, rng):
        for _ in range(25):
            graph, function = random_graph_values(rng, edge_probability=0.5)
            complex_ = clique_complex(graph.n_vertices, graph.edges)
            forward = extended_persistence(complex_, function)
            backward = extended_persistence(complex_, function.negated())
            assert backward.negation_image() == forward

    @pytest.mark.parametrize("dim", [0, 1])
    def test_ordinary_counts_match_rank_oracle(self, rng, dim):
        for _ in range(20):
            graph, function = random_graph_values(rng, n_vertices=int(rng.integers(3, 8)),
                                                  edge_probability=0.5)
            complex_ = clique_complex(graph.n_vertices, graph.edges)
            points = extended_persistence(complex_, function).subdiagram(ORD, dim)
            a, b, c, d = np.sort(rng.uniform(-0.1, 3.1, size=4))
            expected = sum(1 for p in points if a < p.birth <= b and c < p.death <= d)
            assert ordinary_count(complex_, function, dim, a, b, c, d) == expected

    def test_essential_classes_match_betti_numbers(self, rng):
        for _ in range(20):
            graph, function = random_graph_values(rng)
            d = extended_persistence(graph, function)
            b0, b1 = betti_numbers(graph)
            assert len([p for p in d if p.kind.is_extended and p.dim == 0]) == b0
            assert len([p for p in d if p.kind.is_extended and p.dim == 1]) == b1


class TestBetti:
    def test_examples(self, path_graph, square_cycle, octahedron, seven_vertex_torus):
        assert betti_numbers(path_graph[0]) == (1, 0)
        assert betti_numbers(square_cycle[0]) == (1, 1)
        assert betti_numbers(octahedron[0]) == (1, 0)
        assert betti_numbers(seven_vertex_torus[0]) == (1, 2)

    def test_gf2_rank(self):
        assert gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2
        assert gf2_rank(np.zeros((0, 0))) == 0


class TestLevelsets:
    def test_cycle_preimage_splits(self, square_cycle):
        complex_, function = square_cycle
        components = levelset_components(complex_, function, Interval.open(0.5, 1.5))
        assert len(components) == 2
        assert {(1,), (0, 1), (1, 2)} == set(components[0])

    def test_cycle_preimage_near_top(self, square_cycle):
        complex_, function = square_cycle
        components = levelset_components(complex_, function, Interval.open(1.5, 2.5))
        assert len(components) == 1
        assert set(components[0]) == {(2,), (1, 2), (2, 3)}

    def test_preimage_outside_range(self, path_graph):
        assert levelset_components(*path_graph, Interval.open(5, 6)) == []
