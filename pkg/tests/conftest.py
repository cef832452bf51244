"""
Shared fans and polytopes.
"""

import itertools

import pytest

from config import settings
from fan import build_fan
from polytope import build_polytope
from utils.logger import reconfigure_logger


# Fans

def projective_plane():
    return build_fan(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [0, 2]])


def weighted_plane(m: int):
    """Normal fan of T_m = conv{(0,0), (1,0), (0,m)}; one cone of multiplicity m."""
    return build_fan(2, [(1, 0), (0, 1), (-m, -1)], [[0, 1], [1, 2], [0, 2]])


@pytest.fixture(autouse=True)
def reset_settings():
    """Keep flag-driven settings from leaking between tests."""
    settings.apply(threads=1, output_format="json", log_level="WARNING", log_format="text", enable_color=False)
    yield
    settings.apply(threads=1, output_format="json", log_level="WARNING", log_format="text", enable_color=False)
    settings.log_file = None
    reconfigure_logger()


@pytest.fixture
def p2_fan():
    return projective_plane()


@pytest.fixture
def p1xp1_fan():
    return build_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [1, 2], [2, 3], [0, 3]])


@pytest.fixture
def t2_fan():
    return weighted_plane(2)


@pytest.fixture
def t3_fan():
    return weighted_plane(3)


@pytest.fixture
def t5_fan():
    return weighted_plane(5)


@pytest.fixture
def cube_fan():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    cones = [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)]
    return build_fan(3, rays, cones)


@pytest.fixture
def p3_fan():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    return build_fan(3, rays, [list(c) for c in itertools.combinations(range(4), 3)])


@pytest.fixture
def quadrant_fan():
    """A single smooth cone: not complete."""
    return build_fan(2, [(1, 0), (0, 1)], [[0, 1]])


@pytest.fixture
def a1_cone_fan():
    """The cone generated by (1,0) and (1,2), multiplicity 2."""
    return build_fan(2, [(1, 0), (1, 2)], [[0, 1]])


@pytest.fixture
def surface_fans(p2_fan, p1xp1_fan, t2_fan, t3_fan, t5_fan):
    return [p2_fan, p1xp1_fan, t2_fan, t3_fan, t5_fan]


@pytest.fixture
def complete_fans(surface_fans, cube_fan, p3_fan):
    return surface_fans + [cube_fan, p3_fan]


# Polytopes

def triangle(m: int):
    return build_polytope([(0, 0), (1, 0), (0, m)])


@pytest.fixture
def unit_square():
    return build_polytope([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def square2():
    return build_polytope([(0, 0), (2, 0), (2, 2), (0, 2)])


@pytest.fixture
def simplex2():
    return build_polytope([(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def simplex3():
    return build_polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture
def wide_triangle():
    return build_polytope([(0, 0), (2, 0), (0, 2)])


@pytest.fixture
def polygons(unit_square, square2, simplex2, wide_triangle):
    return [unit_square, square2, simplex2, wide_triangle] + [triangle(m) for m in (2, 3, 5)]


@pytest.fixture
def simple_polytopes(polygons, simplex3):
    return polygons + [simplex3]
