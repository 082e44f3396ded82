import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib.covers import (INTERSECTION, PROPER, DiagonalBand, Interval, StairKind,
                        build_staircase, build_staircases, classify_point,
                        cover_from_pairs, decompose_interval, uniform_cover,
                        validate_gomic)
from lib.errors import CoverValidationError, InvalidParameters

coordinate = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)


def _kinds(error):
    return {v.kind for v in error.violations}


class TestValidateGomic:
    def test_valid_cover_is_sorted(self):
        cover = cover_from_pairs([(2.5, 4), (0, 2), (1, 3)])
        assert cover.to_list() == [[0, 2], [1, 3], [2.5, 4]]
        assert cover.endpoints() == (0, 1, 2, 2.5, 3, 4)
        assert cover.granularity() == 2

    def test_contained_interval_is_not_minimal(self):
        with pytest.raises(CoverValidationError) as e:
            cover_from_pairs([(0, 3), (1, 2), (2.5, 4)])
        assert "NOT_MINIMAL" in _kinds(e.value)

    def test_interval_inside_union_of_neighbors_is_not_minimal(self):
        with pytest.raises(CoverValidationError) as e:
            cover_from_pairs([(0, 2), (1, 3), (1.5, 4)])
        assert "NOT_MINIMAL" in _kinds(e.value)
        assert any(v.indices == [1] for v in e.value.violations)

    def test_closed_interval_is_not_open(self):
        with pytest.raises(CoverValidationError) as e:
            validate_gomic([Interval.closed(0, 2), Interval.open(1, 3)])
        assert _kinds(e.value) == {"NOT_OPEN"}

    def test_gap_is_disconnected(self):
        with pytest.raises(CoverValidationError) as e:
            cover_from_pairs([(0, 1), (1, 2)])
        assert "DISCONNECTED" in _kinds(e.value)

    def test_singleton_proper_part_is_not_generic(self):
        with pytest.raises(CoverValidationError) as e:
            cover_from_pairs([(0, 2), (1, 3), (2, 4)])
        assert "NOT_GENERIC" in _kinds(e.value)

    def test_all_violations_are_reported(self):
        with pytest.raises(CoverValidationError) as e:
            validate_gomic([Interval.closed(0, 3), Interval.open(1, 2), Interval.open(5, 6)])
        assert {"NOT_OPEN", "NOT_MINIMAL", "DISCONNECTED"} <= _kinds(e.value)
        payload = e.value.to_dict()
        assert payload["code"] == "INVALID_COVER"
        assert len(payload["violations"]) == len(e.value.violations)

    def test_empty_list(self):
        with pytest.raises(InvalidParameters):
            validate_gomic([])


class TestDecomposition:
    def test_first_interval(self):
        cover = cover_from_pairs([(0, 2), (1, 3), (2.5, 4)])
        lower, proper, upper = decompose_interval(cover, 0)
        assert lower is None
        assert proper == Interval(0, 1, False, True)
        assert upper == Interval.open(1, 2)

    def test_middle_interval(self):
        cover = cover_from_pairs([(0, 2), (1, 3), (2.5, 4)])
        lower, proper, upper = decompose_interval(cover, 1)
        assert lower == Interval.open(1, 2)
        assert proper == Interval.closed(2, 2.5)
        assert upper == Interval.open(2.5, 3)

    def test_single_interval(self):
        cover = cover_from_pairs([(0, 5)])
        assert decompose_interval(cover, 0) == (None, Interval.open(0, 5), None)

    def test_index_out_of_range(self):
        with pytest.raises(InvalidParameters):
            decompose_interval(cover_from_pairs([(0, 5)]), 1)

    def test_regions_tile_the_range(self):
        cover = cover_from_pairs([(0, 2), (1, 3), (2.5, 4)])
        regions = cover.regions()
        assert [r.kind for r in regions] == [PROPER, INTERSECTION, PROPER, INTERSECTION, PROPER]
        for left, right in zip(regions, regions[1:]):
            assert left.interval.hi == right.interval.lo
            assert left.interval.hi_closed != right.interval.lo_closed
        assert regions[1].owners == (0, 1)


class TestUniformCover:
    def test_single_interval(self):
        assert uniform_cover(0, 10, 1, 0.2).to_list() == [[0, 10]]

    def test_two_intervals(self):
        cover = uniform_cover(0, 3, 2, 0.25)
        length = 3 / 1.75
        assert cover.granularity() == pytest.approx(length)
        assert cover[0].hi - cover[1].lo == pytest.approx(0.25 * length)
        assert cover[1].hi == 3

    def test_overlaps_are_equal(self):
        cover = uniform_cover(0, 1, 4, 0.3)
        overlaps = [cover[k].hi - cover[k + 1].lo for k in range(3)]
        assert overlaps == pytest.approx([0.3 * cover.granularity()] * 3)

    @pytest.mark.parametrize("args", [(0, 1, 0, 0.2), (0, 1, 3, 0.5), (1, 1, 3, 0.2)])
    def test_bad_parameters(self, args):
        with pytest.raises(InvalidParameters):
            uniform_cover(*args)

    def test_granularity_shrinks(self):
        sizes = [uniform_cover(0, 1, n, 0.25).granularity() for n in (2, 4, 8, 16)]
        assert sizes == sorted(sizes, reverse=True)


class TestStaircases:
    @pytest.fixture
    def cover(self):
        return cover_from_pairs([(0, 2), (1, 3)])

    def test_ord_stair(self, cover):
        stair = build_staircase(cover, StairKind.ORD)
        assert stair.to_dict() == [{"interval": [0, 2], "side": "above"},
                                   {"interval": [2, 3], "side": "above"}]

    def test_ext_minus_and_ext_stairs(self, cover):
        assert build_staircase(cover, "extminusstair").to_dict() == [
            {"interval": [0, 2], "side": "below"}, {"interval": [1, 3], "side": "below"}]
        assert build_staircase(cover, StairKind.EXT).to_dict() == [{"interval": [0, 3], "side": "below"}]

    def test_classify_points(self, cover):
        stairs = build_staircases(cover)
        assert classify_point(stairs[StairKind.ORD], (0.5, 1.5)) == (True, 0.0)
        inside, dist = classify_point(stairs[StairKind.ORD], (0.5, 2.6))
        assert not inside and dist == pytest.approx(0.6)
        inside, dist = classify_point(stairs[StairKind.EXT_MINUS], (2.9, 0.5))
        assert not inside and dist == pytest.approx(0.5)
        assert classify_point(stairs[StairKind.EXT], (2.9, 0.5)) == (True, 0.0)

    def test_below_square_excludes_its_diagonal(self, cover):
        stair = build_staircase(cover, StairKind.EXT_MINUS)
        assert not stair.contains((1.5, 1.5))
        assert stair.classify((1.5, 1.5)) == (False, 0.0)

    def test_unknown_kind(self, cover):
        with pytest.raises(InvalidParameters):
            build_staircase(cover, "diagonal")

    @settings(max_examples=200, deadline=None)
    @given(coordinate, coordinate)
    def test_ext_minus_inside_ext(self, x, y):
        cover = cover_from_pairs([(-1, 1), (0.5, 2), (1.8, 3)])
        if build_staircase(cover, StairKind.EXT_MINUS).contains((x, y)):
            assert build_staircase(cover, StairKind.EXT).contains((x, y))

    @settings(max_examples=200, deadline=None)
    @given(coordinate, coordinate, coordinate, coordinate)
    def test_distance_is_one_lipschitz(self, x1, y1, x2, y2):
        cover = cover_from_pairs([(-1, 1), (0.5, 2), (1.8, 3)])
        shift = max(abs(x1 - x2), abs(y1 - y2))
        for stair in build_staircases(cover).values():
            assert abs(stair.distance((x1, y1)) - stair.distance((x2, y2))) <= shift + 1e-9

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=-0.99, max_value=2.99))
    def test_diagonal_in_every_closure(self, t):
        cover = cover_from_pairs([(-1, 1), (0.5, 2), (1.8, 3)])
        for stair in build_staircases(cover).values():
            assert stair.distance((t, t)) == pytest.approx(0.0, abs=1e-12)


class TestDiagonalBand:
    def test_unbounded(self):
        band = DiagonalBand()
        assert band.classify((1, 1)) == (True, 0.0)
        assert band.distance((0, 2)) == pytest.approx(1.0)

    def test_bounded(self):
        band = DiagonalBand(0, 1)
        assert not band.contains((2, 2))
        assert band.distance((2, 2)) == pytest.approx(1.0)
