"""
Tests for Todd, Hirzebruch, Chern and T-classes of toric varieties.
"""

from fractions import Fraction

import pytest

from classes import (
    TODD,
    ALPHA,
    TODD_HALF_SHIFTED,
    chi_y_subset,
    class_of_kind,
    class_report,
    correction_series,
    ehler_chern_class,
    euler_count,
    hirzebruch_class,
    hirzebruch_decomposed,
    mock_chern,
    mock_hirzebruch,
    normalize_class,
    orbit_classes_subset,
    signature,
    t_class,
    t_class_suite,
    todd_lrr,
    todd_omega,
    todd_series,
    todd_subset,
    top_contribution,
    trivial_factor,
    weighted_projective_correction,
)
from classes.orbit import star_hirzebruch, star_todd, star_todd_omega
from errors import InvalidFanData, InvalidInputError
from fan import boundary_subset, build_fan, star_closed_subset
from intersect import CycleClass, degree, pairing_equal
from scalars import YPolynomial
from schemas.reports import ClassKind


CHI_Y_SURFACE = YPolynomial([1, -1, 1])


class TestSeries:
    def test_todd_coefficients(self):
        assert todd_series(4) == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))

    def test_trivial_factor_of_todd(self):
        assert trivial_factor(TODD, 3)[:3] == (1, Fraction(1, 2), Fraction(1, 12))

    def test_half_shift_removes_linear_term(self):
        coefficients = trivial_factor(TODD_HALF_SHIFTED, 3)
        assert coefficients[1] == 0 and coefficients[3] == 0
        assert coefficients[2] == Fraction(1, 12)

    def test_alpha_is_regular(self):
        assert trivial_factor(ALPHA, 2) == (2, 0, Fraction(1, 6))


class TestToddClass:
    def test_projective_plane(self, p2_fan):
        expected = CycleClass(p2_fan, {(): 1, (0,): Fraction(3, 2), (0, 1): 1})
        assert pairing_equal(todd_lrr(p2_fan), expected)

    @pytest.mark.parametrize("name", ["p2_fan", "p1xp1_fan", "t2_fan", "t3_fan", "cube_fan", "p3_fan"])
    def test_degree_is_one(self, name, request):
        assert degree(todd_lrr(request.getfixturevalue(name))) == 1

    def test_canonical_todd_degree(self, t3_fan, cube_fan):
        # td_0 of the canonical sheaf: (-1)^d chi(O)
        assert degree(todd_omega(t3_fan)) == 1
        assert degree(todd_omega(cube_fan)) == -1

    def test_incomplete_fan(self, quadrant_fan):
        cycle = todd_lrr(quadrant_fan)
        assert cycle.coefficient(()) == 1


class TestHirzebruchClass:
    def test_chi_y_of_surfaces(self, surface_fans):
        for fan in surface_fans[:1] + surface_fans[2:]:
            assert degree(hirzebruch_class(fan)) == CHI_Y_SURFACE
            assert chi_y_subset(fan) == CHI_Y_SURFACE

    def test_chi_y_cross_path(self, complete_fans):
        for fan in complete_fans:
            assert degree(hirzebruch_class(fan)) == chi_y_subset(fan)

    def test_todd_specialization(self, t3_fan):
        assert pairing_equal(hirzebruch_class(t3_fan).specialize(0), todd_lrr(t3_fan))

    def test_l_class_of_projective_plane(self, p2_fan):
        expected = CycleClass(p2_fan, {(): 1, (0, 1): 1})
        assert pairing_equal(hirzebruch_class(p2_fan).specialize(1), expected)

    def test_normalization(self, t5_fan):
        normalized = normalize_class(hirzebruch_class(t5_fan, normalized=False))
        assert pairing_equal(normalized, hirzebruch_class(t5_fan))

    def test_unnormalized_top_coefficient(self, p2_fan):
        cycle = hirzebruch_class(p2_fan, normalized=False)
        assert cycle.coefficient(()) == YPolynomial.one_plus_y(2)

    def test_signature(self, p2_fan, p1xp1_fan, t3_fan):
        assert signature(p2_fan) == 1
        assert signature(t3_fan) == 1
        assert signature(p1xp1_fan) == 0
        assert degree(hirzebruch_class(p1xp1_fan)).evaluate(1) == 0


class TestOrbitClasses:
    def test_orbit_path_matches_lefschetz(self, t3_fan):
        assert pairing_equal(orbit_classes_subset(t3_fan), hirzebruch_class(t3_fan))
        assert pairing_equal(
            orbit_classes_subset(t3_fan, normalized=False),
            hirzebruch_class(t3_fan, normalized=False),
        )

    def test_euler_characteristic(self, complete_fans):
        for fan in complete_fans:
            assert degree(ehler_chern_class(fan)) == euler_count(fan)
        assert [euler_count(f) for f in complete_fans] == [3, 4, 3, 3, 3, 8, 4]

    def test_chern_class_of_boundary(self, p2_fan):
        chern = ehler_chern_class(p2_fan, boundary_subset(p2_fan))
        assert degree(chern) == 3

    def test_todd_of_line(self, p2_fan):
        line = star_closed_subset(p2_fan, [(0,), (0, 1), (0, 2)])
        todd = todd_subset(p2_fan, line)
        assert degree(todd) == 1
        assert chi_y_subset(p2_fan, line) == YPolynomial([1, -1])

    def test_mock_chern(self, t2_fan):
        assert mock_chern(t2_fan).coefficient((1, 2)) == Fraction(1, 2)

    def test_star_classes_are_cached(self, p2_fan):
        assert star_todd(p2_fan, (0,)) is star_todd(p2_fan, (0,))
        for cached in (star_todd, star_todd_omega, star_hirzebruch):
            assert cached.cache_info().maxsize == 128


class TestCorrections:
    def test_a1_singularity(self, a1_cone_fan):
        value = top_contribution(a1_cone_fan, (0, 1))
        assert value == YPolynomial([1, -2, 1]) * Fraction(1, 8)
        assert value.evaluate(-1) == Fraction(1, 2)

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_weighted_plane_point_corrections(self, m):
        fan = build_fan(2, [(1, 0), (0, 1), (-m, -1)], [[0, 1], [1, 2], [0, 2]])
        value = top_contribution(fan, (1, 2)) * m
        assert value.evaluate(1) == Fraction(-(m - 1) * (m - 2), 3)
        assert value.evaluate(0) == Fraction(-(m - 1) * (m - 5), 12)
        assert top_contribution(fan, (1, 2)) == weighted_projective_correction(m, 2)

    def test_smooth_cone_has_no_correction(self, p2_fan):
        with pytest.raises(InvalidFanData):
            correction_series(p2_fan, (0, 1))

    def test_decomposition(self, t2_fan, t3_fan, t5_fan):
        for fan in (t2_fan, t3_fan, t5_fan):
            assert pairing_equal(hirzebruch_decomposed(fan), hirzebruch_class(fan))

    def test_mock_is_exact_on_smooth_fans(self, p2_fan):
        assert pairing_equal(mock_hirzebruch(p2_fan), hirzebruch_class(p2_fan))


class TestTClass:
    def test_projective_plane(self, p2_fan):
        expected = CycleClass(p2_fan, {(): 1, (0,): 3, (0, 1): 4})
        assert pairing_equal(t_class(p2_fan), expected)

    def test_suite(self, t3_fan):
        suite = t_class_suite(t3_fan)
        assert set(suite.alpha) == {(), (1, 2)}
        assert degree(suite.t_class) == 4


class TestDispatch:
    def test_report_degree(self, p2_fan):
        report = class_report(p2_fan, ClassKind.HIRZEBRUCH)
        assert report.degree == CHI_Y_SURFACE
        assert report.label == "T-hat_y(X)"

    def test_l_class_label(self, p2_fan):
        report = class_report(p2_fan, ClassKind.HIRZEBRUCH, y=Fraction(1))
        assert report.label == "T-hat_1 (L-class under projectivity)"
        assert report.degree == 1

    def test_chern_at_minus_one(self, t2_fan):
        report = class_report(t2_fan, ClassKind.HIRZEBRUCH, y=Fraction(-1), normalized=True)
        assert report.degree == 3

    def test_unnormalized_minus_one_refused(self, p2_fan):
        with pytest.raises(InvalidInputError):
            class_of_kind(p2_fan, ClassKind.HIRZEBRUCH, y=Fraction(-1), normalized=False)

    def test_subset_kind_refused(self, p2_fan):
        with pytest.raises(InvalidInputError):
            class_of_kind(p2_fan, ClassKind.TODD, subset=boundary_subset(p2_fan))

    def test_incomplete_fan_has_no_degree(self, quadrant_fan):
        report = class_report(quadrant_fan, ClassKind.TODD)
        assert report.degree is None
        assert report.terms[0].cone == []

    def test_report_round_trip(self, t3_fan):
        report = class_report(t3_fan, ClassKind.HIRZEBRUCH)
        again = type(report).model_validate_json(report.model_dump_json())
        assert again.terms == report.terms
        assert again.degree == report.degree
