"""
Tests for Ehrhart, weighted-count, Hirzebruch-polynomial and Pick identities.
"""

from fractions import Fraction

import pytest

from counting import (
    ehrhart_bruteforce,
    ehrhart_subcomplex,
    ehrhart_via_classes,
    evaluate,
    hirzebruch_polynomial,
    interior_count_via_dual_todd,
    pick_report,
    polygon_area,
    polygon_chi_y,
    weighted_count_identity,
    weighted_face_sum,
)
from errors import InvalidInputError, NotPolygon
from polytope import boundary, build_polytope, subcomplex, whole
from scalars import YPolynomial


ONE_PLUS_Y = YPolynomial.one_plus_y(1)


class TestEhrhart:
    def test_standard_simplex(self, simplex2):
        result = ehrhart_via_classes(simplex2)
        assert result.coefficients == [1, Fraction(3, 2), Fraction(1, 2)]
        assert result.passed

    def test_unit_square(self, unit_square):
        assert ehrhart_via_classes(unit_square).coefficients == [1, 2, 1]

    def test_singular_normal_fan(self):
        triangle = build_polytope([(0, 0), (1, 0), (0, 2)])
        result = ehrhart_via_classes(triangle)
        assert result.coefficients == [1, 2, 1]
        assert all(r.residual == 0 for r in result.rows)

    def test_three_simplex(self, simplex3):
        result = ehrhart_via_classes(simplex3, max_dilate=6)
        assert result.coefficients == [1, Fraction(11, 6), 1, Fraction(1, 6)]
        assert [r.dilation for r in result.rows] == list(range(7))

    def test_residual_table_reaches_rank_plus_two(self, unit_square):
        rows = ehrhart_via_classes(unit_square, max_dilate=1).rows
        assert [r.count for r in rows] == [1, 4, 9, 16, 25]

    def test_reciprocity(self, square2):
        result = ehrhart_via_classes(square2)
        assert [r.interior_count for r in result.reciprocity] == [1, 9, 25]
        assert all(r.value == r.interior_count for r in result.reciprocity)

    def test_all_simple_polytopes(self, simple_polytopes):
        for polytope in simple_polytopes:
            result = ehrhart_via_classes(polytope)
            assert result.passed
            assert result.coefficients[0] == 1

    def test_negative_dilation(self, unit_square):
        with pytest.raises(InvalidInputError):
            ehrhart_via_classes(unit_square, max_dilate=-1)

    def test_evaluate(self):
        assert evaluate([1, Fraction(3, 2), Fraction(1, 2)], 2) == 6

    def test_bruteforce(self, wide_triangle):
        assert ehrhart_bruteforce(wide_triangle, 2) == [1, 6, 15]


class TestSubcomplexEhrhart:
    def test_boundary(self, unit_square):
        result = ehrhart_subcomplex(boundary(unit_square))
        assert result.coefficients == [0, 4, 0]
        assert result.euler_characteristic == 0
        assert result.rows[0].dilation == 1
        assert [r.count for r in result.rows[:2]] == [4, 8]
        assert result.passed

    def test_single_edge(self, unit_square):
        edge = sorted(unit_square.faces_of_dimension(1)[0].vertices)
        result = ehrhart_subcomplex(subcomplex(unit_square, [edge]))
        assert result.coefficients == [1, 1, 0]
        assert result.euler_characteristic == 1
        assert result.passed

    def test_whole_polytope(self, simplex2):
        result = ehrhart_subcomplex(whole(simplex2))
        assert result.coefficients == [1, Fraction(3, 2), Fraction(1, 2)]
        assert result.subcomplex


class TestInteriorCount:
    def test_dual_todd(self, unit_square, square2, simplex3):
        assert interior_count_via_dual_todd(unit_square) == 0
        assert interior_count_via_dual_todd(square2) == 1
        assert interior_count_via_dual_todd(simplex3) == 0


class TestWeightedCounts:
    def test_standard(self, square2):
        report = weighted_count_identity(square2)
        assert report.lhs == 4 + ONE_PLUS_Y * 4 + ONE_PLUS_Y ** 2
        assert report.equal
        assert not report.subcomplex

    def test_face_sum(self, square2):
        assert weighted_face_sum(whole(square2)).evaluate(0) == 9

    def test_dual_and_half(self, unit_square):
        dual = weighted_count_identity(unit_square, mode="dual")
        half = weighted_count_identity(unit_square, mode="half")
        assert dual.lhs == 1 and dual.equal
        assert half.lhs == 1 and half.equal

    def test_standard_on_boundary(self, square2):
        report = weighted_count_identity(square2, boundary(square2))
        assert report.equal
        assert report.subcomplex
        assert report.lhs == 4 + ONE_PLUS_Y * 4

    def test_half_on_boundary(self, simplex2):
        assert weighted_count_identity(simplex2, boundary(simplex2), mode="half").equal

    def test_dual_needs_whole_polytope(self, unit_square):
        with pytest.raises(InvalidInputError):
            weighted_count_identity(unit_square, boundary(unit_square), mode="dual")

    def test_all_polygons(self, polygons):
        for polygon in polygons:
            for mode in ("standard", "dual", "half"):
                assert weighted_count_identity(polygon, mode=mode).equal


class TestHirzebruchPolynomial:
    def test_square(self, square2):
        report = hirzebruch_polynomial(square2)
        assert report.equal and report.table_matches
        assert report.polynomial.evaluate(0) == 9
        assert [e.value for e in report.table] == [9, 6, 1]

    def test_subcomplex(self, square2):
        report = hirzebruch_polynomial(square2, boundary(square2))
        assert report.equal and report.table_matches
        assert report.polynomial == 4 + ONE_PLUS_Y * 4

    def test_simplex(self, simplex3):
        report = hirzebruch_polynomial(simplex3)
        assert report.equal
        assert report.polynomial.evaluate(0) == 4


class TestPick:
    def test_square(self, square2):
        report = pick_report(square2)
        assert report.lattice_points == 9
        assert report.area == 4
        assert report.boundary_points == 8
        assert report.interior_points == 1
        assert report.ypick_equal and report.pick_equal and report.class_equal

    def test_triangle(self, wide_triangle):
        report = pick_report(wide_triangle)
        assert report.lattice_points == 6
        assert report.area == 2
        assert report.boundary_points == 6
        assert report.ypick_equal and report.pick_equal and report.class_equal

    def test_all_polygons(self, polygons):
        for polygon in polygons:
            report = pick_report(polygon)
            assert report.ypick_equal and report.pick_equal and report.class_equal

    def test_polygon_chi_y(self, unit_square, simplex2):
        assert polygon_chi_y(unit_square) == YPolynomial([1, -2, 1])
        assert polygon_chi_y(simplex2) == YPolynomial([1, -1, 1])

    def test_area(self):
        assert polygon_area(build_polytope([(0, 0), (1, 0), (0, 5)])) == Fraction(5, 2)

    def test_needs_polygon(self, simplex3):
        with pytest.raises(NotPolygon):
            pick_report(simplex3)
