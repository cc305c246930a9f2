from fractions import Fraction

import pytest

from tvb.exceptions import DimensionMismatch
from tvb.exactmath import (
    LPStatus,
    in_convex_hull,
    is_feasible,
    linear_program,
    lp_is_extreme,
)


def test_optimal():
    result = linear_program([[1, 1]], [1], cost=[0, -1])
    assert result.status is LPStatus.OPTIMAL
    assert result.solution == (Fraction(0), Fraction(1))
    assert result.value == -1


def test_unbounded():
    result = linear_program([[1, -1]], [1], cost=[-1, 0])
    assert result.status is LPStatus.UNBOUNDED


def test_infeasible():
    assert linear_program([[1, 1]], [-1]).status is LPStatus.INFEASIBLE
    assert not is_feasible([[1, 0], [1, 0]], [1, 2])
    assert is_feasible([[1, 0], [1, 0]], [2, 2])


def test_convex_hull():
    square = [(0, 0), (2, 0), (0, 2), (2, 2)]
    assert in_convex_hull(square, (1, 1))
    assert in_convex_hull(square, (Fraction(1, 2), 2))
    assert not in_convex_hull(square, (3, 1))
    assert not in_convex_hull([], (0, 0))


@pytest.mark.parametrize("index,expected", [(0, True), (1, True), (2, False)])
def test_lp_is_extreme(index, expected):
    points = [(0, 0), (2, 0), (1, 0)]
    assert lp_is_extreme(points, index) is expected


def test_lp_is_extreme_index():
    with pytest.raises(DimensionMismatch) as exc:
        lp_is_extreme([(0, 0), (1, 0), (0, 1)], 3)

    assert str(exc.value) == "Index 3 out of range for 3 points."
