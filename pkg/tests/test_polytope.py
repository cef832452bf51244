"""
Tests for polytope facets, faces, normal fans, counting and subcomplexes.
"""

import pytest

from config import settings
from errors import InvalidPolytopeData, NotFullDimensional, NotPolygon, NotSimple, RankTooHigh
from polytope import (
    boundary,
    build_polytope,
    bruteforce_counts,
    count_lattice_points,
    count_union,
    cyclic_vertices,
    euler_characteristic,
    face_counts,
    facet_inequalities,
    facet_report,
    interior_count,
    normal_fan,
    polytope_divisor,
    relint_counts,
    subcomplex,
    subcomplex_from_input,
    whole,
)
from schemas.inputs import PolytopeSubcomplexInput


class TestBuildPolytope:
    def test_rank(self, simplex3):
        assert simplex3.rank == 3

    def test_duplicate_vertex(self):
        with pytest.raises(InvalidPolytopeData):
            build_polytope([(0, 0), (1, 0), (0, 1), (1, 0)])

    def test_non_vertex(self):
        with pytest.raises(InvalidPolytopeData):
            build_polytope([(0, 0), (2, 0), (0, 2), (1, 0)])

    def test_mismatched_lengths(self):
        with pytest.raises(InvalidPolytopeData):
            build_polytope([(0, 0), (1, 0, 0)])

    def test_not_full_dimensional(self):
        with pytest.raises(NotFullDimensional):
            build_polytope([(0, 0), (1, 1), (2, 2)])

    def test_rank_cap(self):
        settings.apply(polytope_rank_cap=2)
        try:
            with pytest.raises(RankTooHigh):
                build_polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        finally:
            settings.apply(polytope_rank_cap=3)


class TestFacets:
    def test_unit_square(self, unit_square):
        assert facet_inequalities(unit_square) == [((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)]

    def test_simplex(self, simplex2):
        assert facet_inequalities(simplex2) == [((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)]

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_triangle_normals(self, m):
        polytope = build_polytope([(0, 0), (1, 0), (0, m)])
        assert normal_fan(polytope).fan.rays == ((1, 0), (0, 1), (-m, -1))
        assert normal_fan(polytope).fan.multiplicity((1, 2)) == m

    def test_face_counts(self, unit_square, simplex3):
        assert face_counts(unit_square) == {0: 4, 1: 4, 2: 1}
        assert face_counts(simplex3) == {0: 4, 1: 6, 2: 4, 3: 1}

    def test_cyclic_order(self, unit_square):
        order = cyclic_vertices(unit_square)
        assert order[0] == 0 and sorted(order) == [0, 1, 2, 3]
        assert order[2] == 2

    def test_cyclic_order_needs_polygon(self, simplex3):
        with pytest.raises(NotPolygon):
            cyclic_vertices(simplex3)


class TestNormalFan:
    def test_square_gives_p1xp1(self, unit_square):
        fan = normal_fan(unit_square).fan
        assert fan.is_complete and fan.is_smooth
        assert len(fan.maximal_cones) == 4

    def test_face_to_cone_dimensions(self, simplex3):
        normal = normal_fan(simplex3)
        for face in simplex3.faces:
            assert len(normal.cone_of(face)) == 3 - face.dimension
        assert normal.cone_of(simplex3.full_face) == ()

    def test_face_map_is_read_only(self, simplex3):
        normal = normal_fan(simplex3)
        with pytest.raises(TypeError):
            normal.face_to_cone[simplex3.full_face] = (0,)
        assert normal_fan.cache_info().maxsize == 128
        assert relint_counts.cache_info().maxsize == 128

    def test_divisor(self, square2):
        assert polytope_divisor(square2).coefficients == {2: 2, 3: 2}
        assert polytope_divisor(square2, 3).coefficients == {2: 6, 3: 6}

    def test_not_simple(self):
        octahedron = build_polytope([
            (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1),
        ])
        assert not octahedron.is_simple
        with pytest.raises(NotSimple):
            normal_fan(octahedron)


class TestCounting:
    def test_bruteforce(self, unit_square, simplex2, simplex3):
        assert bruteforce_counts(unit_square, 2) == [1, 4, 9]
        assert bruteforce_counts(simplex2, 2) == [1, 3, 6]
        assert bruteforce_counts(simplex3, 2) == [1, 4, 10]

    def test_interior(self, unit_square, square2):
        assert interior_count(unit_square) == 0
        assert interior_count(square2) == 1
        assert interior_count(unit_square, 3) == 4

    def test_relative_interior_of_edges(self, square2):
        counts = relint_counts(square2, 1)
        assert all(counts[e] == 1 for e in square2.faces_of_dimension(1))
        assert all(counts[v] == 1 for v in square2.faces_of_dimension(0))

    def test_face_modes(self, square2):
        edge = square2.faces_of_dimension(1)[0]
        assert count_lattice_points(square2, 1, face=edge) == 3
        assert count_lattice_points(square2, 1, mode="relative-interior", face=edge) == 1

    def test_dilation_zero_counts_one_point(self, simplex3):
        assert count_lattice_points(simplex3, 0) == 1
        assert interior_count(simplex3, 0) == 1

    def test_dilation_zero_faces(self, square2):
        counts = relint_counts(square2, 0)
        edge = square2.faces_of_dimension(1)[0]
        assert counts[edge] == 1
        assert all(counts[f] == 1 for f in square2.faces)
        assert count_lattice_points(square2, 0, face=edge) == 1
        assert count_lattice_points(square2, 0, mode="relative-interior", face=edge) == 1

    def test_union(self, square2):
        assert count_union(square2, boundary(square2)) == 8
        assert count_union(square2, boundary(square2), 0) == 1
        assert count_union(square2, [], 0) == 0

    def test_counts_are_read_only(self, square2):
        counts = relint_counts(square2, 1)
        with pytest.raises(TypeError):
            counts[square2.full_face] = 0
        assert relint_counts(square2, 1)[square2.full_face] == 1


class TestSubcomplex:
    def test_closure(self, unit_square):
        edge = sorted(unit_square.faces_of_dimension(1)[0].vertices)
        complex_ = subcomplex(unit_square, [edge])
        assert len(complex_) == 3
        assert euler_characteristic(complex_) == 1
        assert not complex_.is_full

    def test_not_a_face(self, unit_square):
        with pytest.raises(InvalidPolytopeData):
            subcomplex(unit_square, [[0, 2]])

    def test_boundary_and_whole(self, unit_square):
        assert euler_characteristic(boundary(unit_square)) == 0
        assert euler_characteristic(whole(unit_square)) == 1
        assert whole(unit_square).is_full

    def test_cone_subset(self, unit_square):
        subset = boundary(unit_square).cone_subset()
        assert () not in subset
        assert len(subset) == 8

    def test_from_input(self, unit_square):
        complex_ = subcomplex_from_input(unit_square, PolytopeSubcomplexInput(boundary=True))
        assert len(complex_) == 8
        assert subcomplex_from_input(unit_square, None).is_full


class TestFacetReport:
    def test_report(self, simplex2):
        report = facet_report(simplex2)
        assert report.simple
        assert report.face_counts == {0: 3, 1: 3, 2: 1}
        assert report.normal_fan_rays == [[1, 0], [0, 1], [-1, -1]]
        assert [f.offset for f in report.facets] == [0, 0, 1]
