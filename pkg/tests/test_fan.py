"""
Tests for fan construction, cone groups, star fans and subsets.
"""

from fractions import Fraction

import pytest

from errors import (
    BadIntersection,
    InvalidFanData,
    NonPrimitiveRay,
    NotComplete,
    NotSimplicial,
    NotStarClosed,
)
from fan import (
    boundary_subset,
    build_fan,
    fan_report,
    span_reduction,
    star_closed_subset,
    star_fan,
)


class TestBuildFan:
    def test_face_closure(self, p2_fan):
        assert len(p2_fan.cones) == 7
        assert p2_fan.cones[0] == ()
        assert p2_fan.cones_of_dimension(1) == [(0,), (1,), (2,)]

    def test_multiplicities(self, t3_fan):
        assert t3_fan.multiplicity((1, 2)) == 3
        assert t3_fan.multiplicity((0, 2)) == 1
        assert t3_fan.singular_cones == [(1, 2)]
        assert not t3_fan.is_smooth

    def test_redundant_cones_are_faces(self):
        fan = build_fan(2, [(1, 0), (0, 1)], [[0, 1], [0]])
        assert fan.maximal_cones == ((0, 1),)

    def test_non_primitive_ray(self):
        with pytest.raises(NonPrimitiveRay) as info:
            build_fan(2, [(2, 0), (0, 1)], [[0, 1]])
        assert info.value.detail["ray"] == 0

    def test_zero_ray(self):
        with pytest.raises(NonPrimitiveRay):
            build_fan(2, [(0, 0)], [[0]])

    def test_duplicate_rays(self):
        with pytest.raises(InvalidFanData):
            build_fan(2, [(1, 0), (1, 0)], [[0], [1]])

    def test_index_out_of_range(self):
        with pytest.raises(InvalidFanData):
            build_fan(2, [(1, 0)], [[0, 1]])

    def test_unused_ray(self):
        with pytest.raises(InvalidFanData):
            build_fan(2, [(1, 0), (0, 1)], [[0]])

    def test_not_simplicial(self):
        with pytest.raises(NotSimplicial):
            build_fan(2, [(1, 0), (0, 1), (1, 1)], [[0, 1, 2]])

    def test_overlapping_cones(self):
        with pytest.raises(BadIntersection):
            build_fan(2, [(1, 0), (0, 1), (1, 1)], [[0, 1], [0, 2]])

    def test_completeness(self, complete_fans, quadrant_fan):
        assert all(fan.is_complete for fan in complete_fans)
        assert not quadrant_fan.is_complete
        with pytest.raises(NotComplete):
            quadrant_fan.require_complete("degree")


class TestConeGroups:
    def test_group_order_is_multiplicity(self, t5_fan):
        group = t5_fan.cone_group((1, 2))
        assert group.multiplicity == 5
        assert len(group.elements) == 5
        assert len(group.interior_elements) == 4

    def test_a1_characters(self, a1_cone_fan):
        group = a1_cone_fan.cone_group((0, 1))
        (element,) = group.interior_elements
        assert element.exponents == (Fraction(1, 2), Fraction(1, 2))
        assert element.character(0) == -1

    def test_smooth_cone_has_trivial_group(self, p2_fan):
        group = p2_fan.cone_group((0, 1))
        assert len(group.elements) == 1
        assert group.elements[0].is_identity


class TestStarFan:
    def test_star_of_ray_is_projective_line(self, p2_fan):
        star = star_fan(p2_fan, (0,))
        assert star.fan.rank == 1
        assert sorted(star.fan.rays) == [(-1,), (1,)]
        assert star.fan.is_complete

    def test_cone_correspondence(self, p2_fan):
        star = star_fan(p2_fan, (0,))
        for star_cone in star.fan.cones:
            ambient = star.to_ambient(star_cone)
            assert set(star.cone).issubset(ambient)
            assert star.to_star(ambient) == star_cone

    def test_star_of_maximal_cone_is_point(self, p2_fan):
        star = star_fan(p2_fan, (0, 1))
        assert star.fan.rank == 0
        assert star.fan.cones == ((),)

    def test_singular_star_is_primitive(self, t3_fan):
        star = star_fan(t3_fan, (2,))
        assert all(abs(r[0]) == 1 for r in star.fan.rays)

    def test_span_reduction(self):
        fan = build_fan(3, [(1, 0, 0), (-1, 0, 0)], [[0], [1]])
        core, torus = span_reduction(fan)
        assert torus == 2
        assert core.rank == 1
        assert fan.torus_rank == 2

    def test_ray_map_is_read_only(self, p2_fan):
        star = star_fan(p2_fan, (0,))
        with pytest.raises(TypeError):
            star.ray_map[0] = 5
        assert star_fan(p2_fan, (0,)).to_star((0, 1)) == star.to_star((0, 1))

    def test_caches_are_bounded(self):
        assert star_fan.cache_info().maxsize == 128
        assert span_reduction.cache_info().maxsize == 128


class TestSubsets:
    def test_star_closed(self, p2_fan):
        subset = star_closed_subset(p2_fan, [(0,), (0, 1), (0, 2)])
        assert len(subset) == 3
        assert (0,) in subset and () not in subset

    def test_not_star_closed(self, p2_fan):
        with pytest.raises(NotStarClosed) as info:
            star_closed_subset(p2_fan, [(0,), (0, 1)])
        assert info.value.detail["missing"] == [0, 2]

    def test_unknown_cone(self, p2_fan):
        with pytest.raises(InvalidFanData):
            star_closed_subset(p2_fan, [(0, 1, 2)])

    def test_boundary(self, p2_fan):
        subset = boundary_subset(p2_fan)
        assert len(subset) == 6
        assert not subset.is_full()


class TestFanReport:
    def test_smooth_complete(self, p2_fan):
        report = fan_report(p2_fan)
        assert report.smooth and report.complete
        assert report.completeness == "complete (checked)"
        assert report.singular_cones == []

    def test_singular(self, t2_fan):
        report = fan_report(t2_fan)
        assert [(s.cone, s.multiplicity) for s in report.singular_cones] == [([1, 2], 2)]

    def test_incomplete(self, quadrant_fan):
        report = fan_report(quadrant_fan)
        assert not report.complete
        assert report.completeness == "incomplete"
