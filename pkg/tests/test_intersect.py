"""
Tests for cycle classes, the intersection kernel and degrees.
"""

from fractions import Fraction

import pytest

from errors import NotComplete
from intersect import (
    CohomExpression,
    CycleClass,
    DivisorClass,
    cohom_cap,
    degree,
    divisor_times_cycle,
    exp_divisor,
    fundamental_class,
    get_kernel,
    orbit_class,
    pairing,
    pairing_equal,
    pairing_witness,
)
from scalars import YPolynomial


def _monomial_degree(fan, *rays):
    expression = CohomExpression({tuple(rays): 1}, fan.rank)
    return degree(cohom_cap(expression, fundamental_class(fan)))


class TestKernel:
    def test_transverse_product(self, p2_fan):
        cycle = divisor_times_cycle(p2_fan, 1, orbit_class(p2_fan, (0,)))
        assert cycle.terms == {(0, 1): 1}

    def test_projective_plane_self_intersection(self, p2_fan):
        assert _monomial_degree(p2_fan, 0, 0) == 1
        assert _monomial_degree(p2_fan, 0, 1) == 1

    def test_quadric_self_intersection(self, p1xp1_fan):
        assert _monomial_degree(p1xp1_fan, 0, 0) == 0
        assert _monomial_degree(p1xp1_fan, 0, 1) == 1

    def test_weighted_plane(self, t2_fan):
        assert _monomial_degree(t2_fan, 1, 2) == Fraction(1, 2)
        assert _monomial_degree(t2_fan, 0, 2) == 1
        assert _monomial_degree(t2_fan, 2, 2) == Fraction(1, 2)
        assert _monomial_degree(t2_fan, 0, 0) == 2

    def test_cube_triple_point(self, cube_fan):
        assert _monomial_degree(cube_fan, 0, 1, 2) == 1
        assert _monomial_degree(cube_fan, 0, 0, 1) == 0

    def test_projective_space_cube(self, p3_fan):
        assert _monomial_degree(p3_fan, 3, 3, 3) == 1

    def test_kernel_is_shared_per_fan(self, p2_fan):
        assert get_kernel(p2_fan) is get_kernel(p2_fan)
        assert get_kernel.cache_info().maxsize == 128


class TestDegree:
    def test_point_classes(self, p2_fan):
        point = CycleClass(p2_fan, {(0, 1): 1, (1, 2): Fraction(1, 2)})
        assert degree(point) == Fraction(3, 2)

    def test_incomplete_fan(self, quadrant_fan):
        with pytest.raises(NotComplete):
            degree(fundamental_class(quadrant_fan))

    def test_exponential(self, p2_fan):
        line = DivisorClass({2: 1})
        assert degree(cohom_cap(exp_divisor(line, 2), fundamental_class(p2_fan))) == Fraction(1, 2)

    def test_symbolic_coefficients(self, p2_fan):
        y = YPolynomial.y()
        cycle = CycleClass(p2_fan, {(): 1, (0, 2): 1 + y})
        assert degree(cycle) == 1 + y


class TestPairing:
    def test_linearly_equivalent_lines(self, p2_fan):
        first = orbit_class(p2_fan, (0,))
        second = orbit_class(p2_fan, (2,))
        assert pairing_equal(first, second)
        assert pairing(first, (1,)) == 1

    def test_witness(self, p1xp1_fan):
        horizontal = orbit_class(p1xp1_fan, (0,))
        vertical = orbit_class(p1xp1_fan, (1,))
        assert pairing_witness(horizontal, vertical) == (0,)

    def test_points_are_equal(self, cube_fan):
        assert pairing_equal(orbit_class(cube_fan, (0, 1, 2)), orbit_class(cube_fan, (3, 4, 5)))


class TestCycleClass:
    def test_drops_zero_terms(self, p2_fan):
        assert CycleClass(p2_fan, {(0,): 0}).is_zero()

    def test_dual_and_adams(self, p2_fan):
        cycle = CycleClass(p2_fan, {(): 1, (0,): 1, (0, 1): 1})
        dual = cycle.dual()
        assert dual.coefficient(()) == 1 and dual.coefficient((0,)) == -1
        assert cycle.adams(2).coefficient(()) == 4

    def test_specialize(self, p2_fan):
        cycle = CycleClass(p2_fan, {(0,): YPolynomial([1, 2])})
        assert cycle.specialize(Fraction(1, 2)).coefficient((0,)) == 2

    def test_different_fans(self, p2_fan, t2_fan):
        with pytest.raises(ValueError):
            fundamental_class(p2_fan) + fundamental_class(t2_fan)
