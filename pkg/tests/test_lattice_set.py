import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from solvers.models import AffineLatticeSet, Equation3, System2x3
from solvers.plane_solver import solve3
from solvers.system_solver import solve_system
from utils.lattice_set import (
    Ball,
    Region,
    contains,
    count_points,
    enumerate_points,
    equivalent,
    parameter_range,
    positive,
    triangle,
)


def perimeter_system(p: int) -> System2x3:
    return System2x3(Equation3(1, 1, 1, p), Equation3(7, -10, 3, 0))


PLANE = solve3(Equation3(1, -3, -4, 0))[0]
LINE = AffineLatticeSet.lattice((5, 3, 4), [(-10, 21, 48)])


# ======================================================================================
# ENUMERATION
# ======================================================================================

def test_enumerate_plane_in_cube():
    points = enumerate_points(PLANE, Region.cube(-2, 2))
    assert points == [
        (-2, -2, 1),
        (-2, 2, -2),
        (-1, 1, -1),
        (0, 0, 0),
        (1, -1, 1),
        (2, -2, 2),
        (2, 2, -1),
    ]


def test_enumerate_with_ball():
    expected = [(-1, 1, -1), (0, 0, 0), (1, -1, 1)]
    with_ball = Region.cube(-2, 2, ball=Ball((0, 0, 0), 4))
    assert enumerate_points(PLANE, with_ball) == expected
    assert enumerate_points(PLANE, Region.from_ball((0, 0, 0), 4)) == expected


def test_ball_filter_matches_box_then_filter():
    region = Region.from_ball((1, -1, 0), 9)
    boxed = enumerate_points(PLANE, Region(region.box))
    assert enumerate_points(PLANE, region) == [p for p in boxed if region.ball.contains(p)]


def test_coin_example_count():
    solution, _ = solve3(Equation3(2, 1, 5, 16))
    region = Region(box=((0, 8), (0, 16), (0, 3)))
    assert count_points(solution, region) == 20


def test_coprime_pair_example_in_cube():
    solution, _ = solve3(Equation3(2, 3, 7, 23))
    # (2, 4, 1) also solves the equation but y = 4 lies outside [-3, 3]
    assert enumerate_points(solution, Region.cube(-3, 3)) == [(-2, 2, 3), (0, 3, 2), (1, 0, 3), (3, 1, 2)]


def test_coprime_pair_example_with_wider_y_axis():
    solution, _ = solve3(Equation3(2, 3, 7, 23))
    points = enumerate_points(solution, Region(box=((-3, 3), (-3, 4), (-3, 3))))
    assert set(points) == {(0, 3, 2), (3, 1, 2), (2, 4, 1), (1, 0, 3), (-2, 2, 3)}


def test_empty_set_has_no_points():
    assert enumerate_points(AffineLatticeSet.empty(3, 2, 3), Region.cube(-5, 5)) == []
    assert count_points(AffineLatticeSet.empty(3), Region.cube(-5, 5)) == 0


def test_rank_zero_set():
    single = AffineLatticeSet.lattice((1, 2, 3))
    assert enumerate_points(single, Region.cube(0, 3)) == [(1, 2, 3)]
    assert enumerate_points(single, Region.cube(-1, 1)) == []


def test_all_space():
    everything = AffineLatticeSet.lattice((0, 0, 0), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert count_points(everything, Region.cube(-1, 1)) == 27


def test_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        enumerate_points(PLANE, Region.cube(-2, 2, dimension=2))


# ======================================================================================
# PERIMETER EXAMPLE
# ======================================================================================

def test_positive_points_for_perimeter_85():
    solution, _ = solve_system(perimeter_system(85))
    region = Region.cube(1, 85, predicates=(positive,))
    assert enumerate_points(solution, region) == [(11, 23, 51), (24, 27, 34), (37, 31, 17)]


def test_triangle_points_for_perimeter_85():
    solution, _ = solve_system(perimeter_system(85))
    region = Region.cube(1, 85, predicates=(positive, triangle))
    assert enumerate_points(solution, region) == [(24, 27, 34), (37, 31, 17)]
    assert count_points(solution, region) == 2


def test_triangle_parameters_lie_in_open_interval():
    p = 85
    solution, _ = solve_system(perimeter_system(p))
    lower, upper = Fraction(17 * p, 26), Fraction(23 * p, 34)
    for x, y, z in enumerate_points(solution, Region.cube(1, p, predicates=(positive, triangle))):
        # x = 9p - 13m, y = 3p - 4m, z = -11p + 17m
        m = Fraction(9 * p - x, 13)
        assert m.denominator == 1
        assert (y, z) == (3 * p - 4 * m, -11 * p + 17 * m)
        assert lower < m < upper


def test_smallest_perimeter_with_triangle():
    found = {}
    for p in range(1, 4):
        solution, _ = solve_system(perimeter_system(p))
        found[p] = enumerate_points(solution, Region.cube(1, p, predicates=(positive, triangle)))
    assert found == {1: [], 2: [], 3: [(1, 1, 1)]}


# ======================================================================================
# MEMBERSHIP AND EQUIVALENCE
# ======================================================================================

def test_contains_on_line():
    assert contains(LINE, (5, 3, 4))
    assert contains(LINE, (-15, 45, 100))
    assert not contains(LINE, (5, 3, 5))


def test_contains_on_plane():
    assert contains(PLANE, (7, 1, 1))
    assert not contains(PLANE, (1, 0, 0))


def test_contains_rank_zero_and_empty():
    assert contains(AffineLatticeSet.lattice((1, 2, 3)), (1, 2, 3))
    assert not contains(AffineLatticeSet.lattice((1, 2, 3)), (1, 2, 4))
    assert not contains(AffineLatticeSet.empty(3), (0, 0, 0))


def test_equivalent_parametrizations():
    reparam = AffineLatticeSet.lattice((-15, 45, 100), [(10, -21, -48)])
    assert equivalent(LINE, reparam)
    sheared = AffineLatticeSet.lattice((3, 1, 0), [(7, 1, 1), (4, 0, 1)])
    assert equivalent(PLANE, sheared)


def test_not_equivalent():
    # index-2 sublattice of the same plane
    assert not equivalent(PLANE, AffineLatticeSet.lattice((0, 0, 0), [(6, 2, 0), (4, 0, 1)]))
    assert not equivalent(LINE, AffineLatticeSet.lattice((5, 3, 4), [(-20, 42, 96)]))
    assert not equivalent(LINE, PLANE)
    assert equivalent(AffineLatticeSet.empty(3, 2, 3), AffineLatticeSet.empty(3))


def test_parameter_range():
    # 5 - 10l in [-15, 25], 3 + 21l in [-39, 45], 4 + 48l in [-92, 100]
    region = Region(box=((-15, 25), (-39, 45), (-92, 100)))
    assert parameter_range(LINE, region) == (-2, 2)
    assert parameter_range(LINE, Region.cube(-3, 3)) is None
    assert parameter_range(AffineLatticeSet.empty(3), region) is None
    with pytest.raises(ValueError, match="rank-1"):
        parameter_range(PLANE, region)


# ======================================================================================
# REGIONS
# ======================================================================================

def test_region_validation():
    with pytest.raises(ValueError, match="Empty interval"):
        Region(box=((0, 1), (3, 2), (0, 0)))
    with pytest.raises(ValueError, match="nonnegative"):
        Region.from_ball((0, 0, 0), -1)
    with pytest.raises(ValueError, match="does not match"):
        Region.cube(-1, 1, ball=Ball((0, 0), 1))


def test_region_volume_and_admits():
    region = Region.from_ball((0, 0, 0), 8, predicates=(positive,))
    assert region.box == ((-2, 2),) * 3
    assert region.volume == 125
    assert region.admits((2, 2, 0)) is False
    assert region.admits((2, 1, 1))
    assert not region.admits((2, 2, 1))


@pytest.mark.parametrize("point, expected", [
    ((3, 4, 5), True),
    ((1, 2, 3), False),
    ((2, 2, 2), True),
])
def test_triangle_predicate(point, expected):
    assert triangle(point) is expected


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(-6, 6), min_size=3, max_size=3),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
)
def test_enumerated_points_are_members(base, g1, g2):
    solution = AffineLatticeSet.lattice(base, [g1, g2])
    try:
        points = enumerate_points(solution, Region.cube(-8, 8))
    except ValueError:
        # dependent generators
        return
    assert points == sorted(set(points))
    for p in points:
        assert contains(solution, p)
