import pytest

from lib.covers import Interval, cover_from_pairs
from lib.diagram import DiagramPoint, ExtendedDiagram, PointKind, Variant, prune_signature
from lib.errors import (EndpointCollision, ForkExpected, InvalidEpsilon,
                        InvalidParameters, OutOfRange)
from lib.reeb import LeveledMultigraph, leveled_isomorphic, quotient_diagram
from lib.telescope import (DOWN_FORK, UP_FORK, CombinatorialTelescope, Cylinder,
                           canonicalize, fork_classify, graph_to_telescope,
                           merge_op, multinerve_of_telescope,
                           preimage_components, shift_op, split_op,
                           telescope_to_graph)
from lib.telescope.canonical import shift_forks

DOUBLE_TORUS_DIAGRAM = ExtendedDiagram((
    DiagramPoint(0, 5, PointKind.EXT_PLUS, 0),
    DiagramPoint(2, 1, PointKind.EXT_MINUS, 1),
    DiagramPoint(4, 3, PointKind.EXT_MINUS, 1),
))


class TestModel:
    def test_maps_must_land_in_slices(self):
        with pytest.raises(InvalidParameters):
            CombinatorialTelescope((0, 1), (("a",), ("b",)), (Cylinder(("y",), {"y": "a"}, {}),))

    def test_critical_values_increase(self):
        with pytest.raises(InvalidParameters):
            CombinatorialTelescope((1, 0), (("a",), ("b",)), (Cylinder.identity(("a",)),))

    def test_graph_roundtrip(self):
        diamond = LeveledMultigraph((0, 1, 1, 2), ((0, 1), (0, 2), (1, 3), (2, 3)))
        telescope = graph_to_telescope(diamond)
        assert [len(s) for s in telescope.slices] == [1, 2, 1]
        assert telescope_to_graph(telescope) == diamond

    def test_torus_graph_has_one_hole(self, torus_telescope):
        graph = telescope_to_graph(torus_telescope)
        assert graph.betti_numbers() == (1, 1)
        assert quotient_diagram(graph) == ExtendedDiagram((
            DiagramPoint(0, 3, PointKind.EXT_PLUS, 0), DiagramPoint(2, 1, PointKind.EXT_MINUS, 1)))


class TestMerge:
    def test_collapses_the_hole(self, torus_telescope):
        merged = merge_op(torus_telescope, 1, 2)
        assert merged.crit == (0, 1.5, 3)
        assert [len(s) for s in merged.slices] == [1, 1, 1]
        assert telescope_to_graph(merged).betti_numbers() == (1, 0)

    def test_inserts_regular_slice(self, torus_telescope):
        merged = merge_op(torus_telescope, 1.25, 1.25)
        assert merged.crit == (0, 1, 1.25, 2, 3)
        assert merged.slices[2] == ("e1", "e2")
        assert leveled_isomorphic(telescope_to_graph(merged),
                                  LeveledMultigraph((0, 1, 2, 2, 3, 4),
                                                    ((0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5))))

    def test_outside_support(self, torus_telescope):
        with pytest.raises(OutOfRange):
            merge_op(torus_telescope, -1, 0.5)

    def test_reversed_range(self, torus_telescope):
        with pytest.raises(InvalidParameters):
            merge_op(torus_telescope, 2, 1)


class TestSplitAndShift:
    def test_split(self, torus_telescope):
        split = split_op(torus_telescope, 1, 0.25)
        assert split.crit == (0, 0.75, 1.25, 2, 3)
        assert split.slices[1] == split.slices[2] == ("s",)
        assert fork_classify(split, 0.75) == {UP_FORK, DOWN_FORK}
        assert fork_classify(split, 1.25) == {UP_FORK}

    def test_split_eps_bounds(self, torus_telescope):
        with pytest.raises(InvalidEpsilon):
            split_op(torus_telescope, 1, 1)
        with pytest.raises(InvalidEpsilon):
            split_op(torus_telescope, 1, 0)

    def test_split_needs_critical_value(self, torus_telescope):
        with pytest.raises(OutOfRange):
            split_op(torus_telescope, 1.5, 0.1)

    def test_shift(self, torus_telescope):
        assert shift_op(torus_telescope, 1, 0.5).crit == (0, 1.5, 2, 3)
        assert shift_op(torus_telescope, 1, 0) is torus_telescope
        with pytest.raises(InvalidEpsilon):
            shift_op(torus_telescope, 1, 1)
        with pytest.raises(InvalidEpsilon):
            shift_op(torus_telescope, 1, -1)


class TestForks:
    @pytest.mark.parametrize("value,kinds", [
        (0, {DOWN_FORK}), (1, {UP_FORK}), (2, {DOWN_FORK}), (3, {UP_FORK})])
    def test_torus(self, torus_telescope, value, kinds):
        assert fork_classify(torus_telescope, value) == kinds

    def test_branching_slice_is_neither(self):
        telescope = CombinatorialTelescope(
            (0, 1, 2), (("a",), ("b", "c"), ("d",)),
            (Cylinder(("y",), {"y": "a"}, {"y": "b"}), Cylinder(("z",), {"z": "b"}, {"z": "d"})))
        assert fork_classify(telescope, 1) == set()


class TestMultiNerve:
    def test_torus(self, torus_telescope, torus_cover):
        graph = multinerve_of_telescope(torus_telescope, torus_cover)
        assert graph.levels == pytest.approx((0.55, 2.45))
        assert graph.edges == ((0, 1), (0, 1))
        mapper = multinerve_of_telescope(torus_telescope, torus_cover, "mapper")
        assert mapper.edges == ((0, 1),)

    def test_double_torus(self, double_torus_telescope, double_torus_cover):
        graph = multinerve_of_telescope(double_torus_telescope, double_torus_cover)
        assert graph.n_nodes == 5
        assert graph.betti_numbers() == (1, 2)
        mapper = multinerve_of_telescope(double_torus_telescope, double_torus_cover, Variant.MAPPER)
        assert mapper.betti_numbers() == (1, 1)

    def test_intersection_pieces(self, torus_telescope):
        assert len(preimage_components(torus_telescope, Interval.open(1.4, 1.6))) == 2
        assert len(preimage_components(torus_telescope, Interval.open(-0.5, 1.6))) == 1

    def test_endpoint_collision(self, torus_telescope):
        with pytest.raises(EndpointCollision):
            multinerve_of_telescope(torus_telescope, cover_from_pairs([(-0.5, 1.0), (0.5, 3.5)]))

    @pytest.mark.parametrize("variant", list(Variant))
    def test_signature_counts_match_pruning(self, torus_telescope, torus_cover, torus_diagram,
                                            double_torus_telescope, double_torus_cover, variant):
        cases = [(torus_telescope, torus_cover, torus_diagram),
                 (double_torus_telescope, double_torus_cover, DOUBLE_TORUS_DIAGRAM)]
        for telescope, cover, diagram in cases:
            graph = multinerve_of_telescope(telescope, cover, variant)
            assert quotient_diagram(graph).counts() == prune_signature(diagram, cover, variant).counts()


class TestCanonicalize:
    def test_torus(self, torus_telescope, torus_cover):
        canonical = canonicalize(torus_telescope, torus_cover)
        assert canonical.crit == pytest.approx((0.5, 2.5))
        assert leveled_isomorphic(telescope_to_graph(canonical),
                                  multinerve_of_telescope(torus_telescope, torus_cover))

    def test_double_torus_fills_empty_proper_part(self, double_torus_telescope, double_torus_cover):
        canonical = canonicalize(double_torus_telescope, double_torus_cover)
        assert canonical.crit == pytest.approx((0.5, 1.65, 2.5, 4.5))
        assert [len(s) for s in canonical.slices] == [1, 2, 1, 1]
        assert leveled_isomorphic(telescope_to_graph(canonical),
                                  multinerve_of_telescope(double_torus_telescope, double_torus_cover))

    def test_support_must_be_inside_cover(self, torus_telescope):
        with pytest.raises(OutOfRange):
            canonicalize(torus_telescope, cover_from_pairs([(0.5, 1.6), (1.4, 3.5)]))

    def test_endpoint_collision(self, torus_telescope):
        with pytest.raises(EndpointCollision):
            canonicalize(torus_telescope, cover_from_pairs([(-0.5, 2.0), (1.4, 3.5)]))

    def test_shift_needs_split_forks(self, torus_telescope):
        # the merge at 2 sits in the intersection without being split first
        cover = cover_from_pairs([(-0.5, 2.5), (1.5, 3.5)])
        with pytest.raises(ForkExpected, match="up-fork"):
            shift_forks(torus_telescope, cover.regions())
