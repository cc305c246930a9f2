from fractions import Fraction

import pytest

from tvb.bundle import (
    WEIGHTS_MESSAGE,
    ClassDegree,
    LinearIdeal,
    build_pair,
    column_degrees,
    custom_pair,
    degree_table,
    nonnegative_form,
    validate_weights,
)
from tvb.exceptions import NonLinearGenerator, PreconditionError, VerificationError
from tvb.exactmath import SparsePoly


@pytest.mark.parametrize(
    "a", [(0, 1), (1, 2), (1, 0, 2), (1, -1, 2), (1, True, 2), (1, 2.0, 3)]
)
def test_invalid_weights(a):
    with pytest.raises(PreconditionError) as exc:
        validate_weights(a)

    assert str(exc.value) == WEIGHTS_MESSAGE
    assert str(exc.value) == "weights must be positive, need ≥ 3"


def test_primal_pair():
    pair = build_pair((1, 1, 1), "primal")
    assert pair.vars == ("y0", "y1", "y2")
    assert pair.D.to_json() == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert pair.to_json()["L_generators"] == ["y0 + y1 + y2"]
    assert pair.nonnegative


def test_primal_diagram_is_diagonal():
    pair = build_pair((1, 2, 3, 4), "primal")
    assert pair.D.to_rows() == [
        [1, 0, 0, 0],
        [0, 2, 0, 0],
        [0, 0, 3, 0],
        [0, 0, 0, 4],
    ]


def test_dual_pair():
    pair = build_pair((1, 2, 3, 4), "dual")
    assert pair.vars == ("z01", "z02", "z03", "z12", "z13", "z23")
    assert pair.D.to_rows() == [
        [-1, -1, -1, 0, 0, 0],
        [-2, 0, 0, -2, -2, 0],
        [0, -3, 0, -3, 0, -3],
        [0, 0, -4, 0, -4, -4],
    ]
    assert len(pair.L.forms) == 4
    assert pair.L.dimension == 3
    assert pair.L.to_json()[0] == "-z01 + z02 - z12"
    assert not pair.nonnegative


def test_dual_nonnegative_form():
    pair = nonnegative_form(build_pair((1, 2, 3, 4), "dual"))
    assert pair.nonnegative
    assert pair.D.to_rows() == [
        [0, 0, 0, 1, 1, 1],
        [0, 2, 2, 0, 0, 2],
        [3, 0, 3, 0, 3, 0],
        [4, 4, 0, 4, 0, 0],
    ]


@pytest.mark.parametrize(
    "a,variant,expected",
    [
        ((1, 2, 3), "primal", [1, 2, 3]),
        ((1, 1, 1, 1), "dual", [2] * 6),
        ((1, 2, 3, 4), "dual", [7, 6, 5, 5, 4, 3]),
    ],
)
def test_column_degrees(a, variant, expected):
    degrees = column_degrees(build_pair(a, variant))
    assert degrees == [ClassDegree(d, 1) for d in expected]


def test_degree_table():
    table = degree_table(build_pair((1, 2, 3), "primal"))
    assert list(table) == ["x0", "x1", "x2", "Y0", "Y1", "Y2"]
    assert table["x1"] == ClassDegree(-1, 0)
    assert table["Y2"] == ClassDegree(3, 1)


def test_unknown_variant():
    with pytest.raises(PreconditionError) as exc:
        build_pair((1, 1, 1), "other")

    assert str(exc.value) == "Unknown variant 'other'. Choices are: primal|dual"


def test_linear_ideal_equality():
    variables = ("y0", "y1", "y2")
    first = LinearIdeal.from_vectors(variables, [[1, 1, 0], [0, 1, 1]])
    second = LinearIdeal.from_vectors(variables, [[1, 2, 1], [1, 0, -1]])
    assert first == second
    assert hash(first) == hash(second)
    assert not first.is_monomial()
    assert LinearIdeal.from_vectors(variables, [[2, 0, 0]]).variables_in() == ["y0"]


def test_linear_ideal_from_polys():
    y0, y1 = SparsePoly.var("y0"), SparsePoly.var("y1")
    ideal = LinearIdeal.from_polys(("y0", "y1"), [y0 - Fraction(1, 2) * y1])
    assert ideal.forms == ((Fraction(1), Fraction(-1, 2)),)
    with pytest.raises(NonLinearGenerator) as exc:
        LinearIdeal.from_polys(("y0", "y1"), [y0 * y1])

    assert str(exc.value) == "Generator y0*y1 is not a linear form."


def test_custom_pair_checks_rows():
    pair = custom_pair(["y0", "y1"], [[1, 1]], [[0, 0], [1, 1]])
    assert pair.variant == "custom"
    with pytest.raises(VerificationError) as exc:
        custom_pair(["y0", "y1"], [[1, 1]], [[0, 1]])

    assert str(exc.value) == (
        "Row 0 of the diagram is not on the tropicalization of y0 + y1."
    )
