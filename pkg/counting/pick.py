"""
Classical and y-parametrized Pick formulas for lattice polygons.
"""

from fractions import Fraction

from classes import hirzebruch_class
from errors import NotPolygon
from intersect import CycleClass, pairing_equal
from polytope import (
    LatticePolytope,
    boundary,
    count_lattice_points,
    count_union,
    cyclic_vertices,
    interior_count,
    normal_fan,
    relint_counts,
)
from scalars import YPolynomial, YRational
from schemas.reports import PickReport


def polygon_area(polytope: LatticePolytope) -> Fraction:
    """Exact area by the shoelace formula over the cyclic vertex order."""
    order = [polytope.vertices[i] for i in cyclic_vertices(polytope)]
    twice = 0
    for (x0, y0), (x1, y1) in zip(order, order[1:] + order[:1]):
        twice += x0 * y1 - x1 * y0
    return Fraction(abs(twice), 2)


def polygon_chi_y(polytope: LatticePolytope) -> YPolynomial:
    """chi_y(P) = (1+y)^2 - (1+y) |{F}| + v."""
    edges = len(polytope.faces_of_dimension(1))
    vertices = len(polytope.faces_of_dimension(0))
    return YPolynomial.one_plus_y(2) - YPolynomial.one_plus_y(1) * edges + vertices


def polygon_class(polytope: LatticePolytope) -> CycleClass:
    """(1+y)^2 [X] + (1-y^2)/2 sum_rho [V_rho] + chi_y(P) [pt] on the normal fan."""
    fan = normal_fan(polytope).fan
    half = YRational(YPolynomial([1, 0, -1]), 2)
    terms = {(): YPolynomial.one_plus_y(2)}
    for ray in range(len(fan.rays)):
        terms[(ray,)] = half
    point = fan.cones_of_dimension(2)[0]
    terms[point] = polygon_chi_y(polytope)
    return CycleClass(fan, terms)


def pick_report(polytope: LatticePolytope) -> PickReport:
    """
    Both sides of the parametrized Pick formula and the classical check.

    (1+y)^2 |Int P ∩ M| + (1+y) sum_F |Relint F ∩ M| + v
        = (1+y)^2 Area(P) + (1-y^2)/2 |dP ∩ M| + chi_y(P)

    Raises:
        NotPolygon: If the polytope is not two-dimensional
    """
    if polytope.rank != 2:
        raise NotPolygon("Pick formulas need a polygon", {"rank": polytope.rank})

    fan = normal_fan(polytope).fan
    area = polygon_area(polytope)
    counts = relint_counts(polytope, 1)
    edges = polytope.faces_of_dimension(1)
    vertices = polytope.faces_of_dimension(0)
    interior = interior_count(polytope)
    on_boundary = count_union(polytope, boundary(polytope))
    total = count_lattice_points(polytope)
    chi_y = polygon_chi_y(polytope)

    one_plus_y = YPolynomial.one_plus_y(1)
    lhs = (
        YPolynomial.one_plus_y(2) * interior
        + one_plus_y * sum(counts[e] for e in edges)
        + len(vertices)
    )
    rhs = (
        YPolynomial.one_plus_y(2) * area
        + YPolynomial([Fraction(1, 2), 0, Fraction(-1, 2)]) * on_boundary
        + chi_y
    )

    return PickReport(
        area=area,
        vertices=len(vertices),
        edges=len(edges),
        boundary_points=on_boundary,
        interior_points=interior,
        lattice_points=total,
        chi_y=chi_y,
        ypick_lhs=lhs,
        ypick_rhs=rhs,
        ypick_equal=lhs == rhs,
        pick_equal=total == area + Fraction(on_boundary, 2) + 1,
        class_equal=pairing_equal(polygon_class(polytope), hirzebruch_class(fan, normalized=False)),
    )
