from fractions import Fraction

import pytest

from tvb.exceptions import DimensionMismatch
from tvb.exactmath import (
    QMatrix,
    hstack,
    matrix_rank,
    nullspace,
    parse_rat,
    rank,
    rref,
    rat_to_str,
    solve_linear,
    vstack,
)


@pytest.mark.parametrize(
    "value,text",
    [
        (Fraction(3), "3"),
        (Fraction(-3, 6), "-1/2"),
        (Fraction(0), "0"),
        (Fraction(7, 4), "7/4"),
    ],
)
def test_rat_to_str(value, text):
    assert rat_to_str(value) == text
    assert parse_rat(text) == value


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0], [0, 1]], 2),
        ([[0, 0, 0]], 0),
        ([[1, 1, 0], [0, 1, 1], [1, 2, 1]], 2),
    ],
)
def test_rank(rows, expected):
    assert rank(rows) == expected
    assert matrix_rank(QMatrix.from_rows(rows)) == expected


def test_nullspace():
    basis = nullspace(QMatrix.from_rows([[1, 1, 1]]))
    assert basis == [
        (Fraction(-1), Fraction(1), Fraction(0)),
        (Fraction(-1), Fraction(0), Fraction(1)),
    ]


def test_solve_linear():
    matrix = QMatrix.from_rows([[2, 1], [1, 3]])
    assert solve_linear(matrix, [3, 4]) == (Fraction(1), Fraction(1))
    assert solve_linear(QMatrix.from_rows([[1, 1]]), [3]) == (Fraction(3), Fraction(0))


def test_solve_linear_inconsistent():
    matrix = QMatrix.from_rows([[1, 1], [1, 1]])
    assert solve_linear(matrix, [1, 2]) is None


def test_rref_column_order():
    reduced, pivots = rref([[1, 1, 0], [0, 1, 1]], [2, 1, 0])
    assert reduced == [[-1, 0, 1], [1, 1, 0]]
    assert pivots == [2, 1]
    assert rref([[0, 0], [0, 0]]) == ([], [])


def test_rref_rejects_partial_order():
    with pytest.raises(DimensionMismatch) as exc:
        rref([[1, 2]], [0])

    assert str(exc.value) == "The column order must permute every column."


def test_solve_linear_recovers_vector(rng):
    checked = 0
    while checked < 50:
        cols = rng.randint(1, 4)
        rows = rng.randint(cols, cols + 2)
        matrix = QMatrix.from_rows(
            [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        )
        if matrix_rank(matrix) < cols:
            continue
        v = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(cols))
        assert solve_linear(matrix, matrix.apply(v)) == v
        checked += 1


def test_stacking():
    left = QMatrix.identity(2)
    right = QMatrix.zeros(2, 1)
    wide = hstack(left, right)
    assert wide.to_rows() == [[1, 0, 0], [0, 1, 0]]
    tall = vstack(wide, QMatrix.from_rows([[1, 1, 1]]))
    assert tall.rows == 3
    assert tall.column(2) == (0, 0, 1)
    assert tall.apply([1, 2, 3]) == (1, 2, 6)


@pytest.mark.parametrize(
    "build,message",
    [
        (lambda: QMatrix(2, 2, (Fraction(1),) * 3), "Expected 4 entries, got 3."),
        (
            lambda: QMatrix.from_rows([[1, 2], [3]]),
            "All rows must have the same length.",
        ),
        (
            lambda: QMatrix.identity(2) @ QMatrix.identity(3),
            "Cannot multiply 2x2 by 3x3.",
        ),
        (
            lambda: hstack(QMatrix.identity(2), QMatrix.identity(3)),
            "Blocks stacked side by side need equal row counts.",
        ),
    ],
)
def test_dimension_mismatch(build, message):
    with pytest.raises(DimensionMismatch) as exc:
        build()

    assert str(exc.value) == message
