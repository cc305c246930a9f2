from fractions import Fraction

import pytest

from tvb.exceptions import DimensionMismatch
from tvb.exactmath import cone_facets, primitive


@pytest.mark.parametrize(
    "vector,expected",
    [
        ((2, 4, -6), (1, 2, -3)),
        ((Fraction(1, 2), Fraction(1, 3)), (3, 2)),
        ((0, 0), (0, 0)),
    ],
)
def test_primitive(vector, expected):
    assert primitive(vector) == tuple(Fraction(value) for value in expected)


def test_orthant():
    hrep = cone_facets([(1, 0), (0, 1)])
    assert hrep.equations == ()
    assert hrep.inequalities == ((0, 1), (1, 0))


def test_lower_dimensional_cone():
    hrep = cone_facets([(1, 0, 0), (0, 1, 0)])
    assert hrep.equations == ((0, 0, 1),)
    assert set(hrep.inequalities) == {(1, 0, 0), (0, 1, 0)}
    assert hrep.contains((1, 1, 0))
    assert not hrep.contains((1, 1, 1))
    assert not hrep.contains((-1, 0, 0))


def test_square_pyramid():
    hrep = cone_facets([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (0, 0, 1)])
    assert hrep.equations == ()
    assert set(hrep.inequalities) == {
        (1, 1, 1),
        (1, -1, 1),
        (-1, 1, 1),
        (-1, -1, 1),
    }
    assert hrep.contains((0, 0, 1))
    assert not hrep.contains((2, 0, 1))


def test_to_json():
    assert cone_facets([(1, 0), (0, 1)]).to_json() == {
        "inequalities": [["0", "1"], ["1", "0"]],
        "equations": [],
    }


@pytest.mark.parametrize(
    "generators,message",
    [
        ([], "At least one generator is required."),
        ([(1, 0), (1, 0, 0)], "All generators need the same dimension."),
    ],
)
def test_invalid_generators(generators, message):
    with pytest.raises(DimensionMismatch) as exc:
        cone_facets(generators)

    assert str(exc.value) == message
