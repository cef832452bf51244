"""
Tests for integer normal forms and sublattice helpers.
"""

from fractions import Fraction

import pytest

from errors import DependentGenerators, NotSaturated
from lattice import (
    hermite_normal_form,
    int_matrix,
    lattice_rank,
    multiplicity,
    parallelotope_points,
    primitive_duals,
    quotient_map,
    rational,
    saturation_basis,
    smith_normal_form,
)


MATRICES = [
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[1, 2], [3, 4]], [1, 2]),
    ([[0, 1], [-3, -1]], [1, 3]),
    ([[6, 4], [4, 6], [2, 2]], [2, 2]),
    ([[2, 0, 0], [0, 3, 0]], [1, 6]),
    ([[1, 1], [2, 2]], [1, 0]),
]


class TestSmithNormalForm:
    @pytest.mark.parametrize("rows, diagonal", MATRICES)
    def test_invariant_factors(self, rows, diagonal):
        assert smith_normal_form(rows).diagonal == diagonal

    @pytest.mark.parametrize("rows, diagonal", MATRICES)
    def test_decomposition(self, rows, diagonal):
        snf = smith_normal_form(rows)
        A = int_matrix(rows)
        assert (snf.U * A * snf.V).to_list() == snf.D.to_list()
        n = len(rows[0])
        identity = [[int(i == j) for j in range(n)] for i in range(n)]
        assert (snf.V * snf.V_inverse).to_list() == identity
        assert snf.rank == sum(1 for d in diagonal if d)

    def test_divisibility_chain(self):
        assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]


class TestHermite:
    def test_echelon_rows(self):
        assert hermite_normal_form([[2, 4], [1, 3]]) == [(1, 1), (0, 2)]

    def test_drops_zero_rows(self):
        assert hermite_normal_form([[1, 1], [2, 2]]) == [(1, 1)]

    def test_reduces_above_pivots(self):
        assert hermite_normal_form([[1, 5, 0], [0, 3, 1], [0, 0, 2]]) == [(1, 2, 1), (0, 3, 1), (0, 0, 2)]

    def test_same_lattice_as_saturation_input(self):
        assert hermite_normal_form([[0, 2], [2, 0], [1, 1]]) == [(1, 1), (0, 2)]


class TestSublattice:
    def test_saturation(self):
        assert saturation_basis([(2, 2)]) == [(1, 1)]
        assert saturation_basis([]) == []

    def test_multiplicity(self):
        assert multiplicity([(1, 0), (1, 2)]) == 2
        assert multiplicity([(0, 1), (-5, -1)]) == 5
        assert multiplicity([(1, 0, 0), (0, 1, 0)]) == 1
        assert multiplicity([]) == 1

    def test_dependent_generators(self):
        with pytest.raises(DependentGenerators):
            multiplicity([(1, 2), (2, 4)])

    def test_quotient_map(self):
        q = quotient_map([(1, 1, 0)], 3)
        assert q.quotient_rank == 2
        assert q.project((1, 1, 0)) == (0, 0)
        for coords in [(1, 0), (0, 1), (2, -3)]:
            assert q.project(q.lift(coords)) == coords

    def test_quotient_with_torsion(self):
        with pytest.raises(NotSaturated):
            quotient_map([(2, 0)], 2)

    def test_parallelotope_points(self):
        points = parallelotope_points([(1, 0), (1, 2)])
        assert len(points) == 2
        assert points[0].point == (0, 0)
        assert points[1].coefficients == (Fraction(1, 2), Fraction(1, 2))
        assert points[1].interior

    def test_parallelotope_count_is_multiplicity(self):
        generators = [(1, 0, 0), (0, 1, 0), (1, 1, 3)]
        assert len(parallelotope_points(generators)) == multiplicity(generators) == 3

    def test_primitive_duals(self):
        duals = primitive_duals([(1, 0), (1, 2)])
        assert [pairing for _, pairing in duals] == [2, 2]

    def test_lattice_rank(self):
        assert lattice_rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
        assert lattice_rank([]) == 0


class TestRational:
    def test_nullspace(self):
        kernel = rational.nullspace([[1, 1, 0]], 3)
        assert len(kernel) == 2
        for v in kernel:
            assert rational.dot([1, 1, 0], v) == 0

    def test_rank(self):
        assert rational.rank([[1, 2], [2, 4]]) == 1

    def test_inverse_and_solve(self):
        assert rational.inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
        assert rational.solve([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]

    def test_singular_inverse(self):
        with pytest.raises(ValueError):
            rational.inverse([[1, 2], [2, 4]])

    def test_coordinates(self):
        assert rational.coordinates([(1, 1, 0), (0, 1, 1)], (1, 3, 2)) == [1, 2]
        assert rational.coordinates([(1, 1, 0)], (1, 0, 0)) is None
