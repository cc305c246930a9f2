from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy as sp

from tvb.exceptions import DimensionMismatch
from tvb.exactmath.rational import (
    RatLike,
    as_rat,
    from_sympy_rat,
    rat_to_str,
    to_sympy_rat,
)
from tvb.types import Rat, RatVector


@dataclass(frozen=True)
class QMatrix:
    """
    A dense matrix of exact rationals, stored row-major.

    * **rows** - The number of rows.
    * **cols** - The number of columns.
    * **entries** - The `rows * cols` entries, row by row.
    """

    rows: int
    cols: int
    entries: Tuple[Rat, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}."
            )

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[RatLike]], cols: Optional[int] = None
    ) -> "QMatrix":
        table = [[as_rat(value) for value in row] for row in rows]
        if cols is None:
            cols = len(table[0]) if table else 0
        for row in table:
            if len(row) != cols:
                raise DimensionMismatch("All rows must have the same length.")
        return cls(len(table), cols, tuple(value for row in table for value in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "QMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], size
        )

    def __getitem__(self, index: Tuple[int, int]) -> Rat:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> RatVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> RatVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Rat]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[RatVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows(self.columns(), self.rows)

    def select_columns(self, indices: Sequence[int]) -> "QMatrix":
        return QMatrix.from_rows(
            [[self[i, j] for j in indices] for i in range(self.rows)], len(indices)
        )

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}."
            )
        return QMatrix.from_rows(
            [
                [
                    sum(
                        (self[i, k] * other[k, j] for k in range(self.cols)),
                        Fraction(0),
                    )
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            other.cols,
        )

    def apply(self, vector: Sequence[Rat]) -> RatVector:
        if len(vector) != self.cols:
            raise DimensionMismatch(
                f"Vector of length {len(vector)} does not match {self.cols} columns."
            )
        return tuple(
            sum((self[i, j] * vector[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def to_json(self) -> List[List[str]]:
        return [[rat_to_str(value) for value in row] for row in self.to_rows()]

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix(
            self.rows, self.cols, [to_sympy_rat(value) for value in self.entries]
        )

    @classmethod
    def from_sympy(cls, matrix: sp.Matrix) -> "QMatrix":
        return cls(
            matrix.rows,
            matrix.cols,
            tuple(from_sympy_rat(value) for value in matrix),
        )


def hstack(*blocks: QMatrix) -> QMatrix:
    rows = blocks[0].rows
    if any(block.rows != rows for block in blocks):
        raise DimensionMismatch("Blocks stacked side by side need equal row counts.")
    return QMatrix.from_rows(
        [[value for block in blocks for value in block.row(i)] for i in range(rows)],
        sum(block.cols for block in blocks),
    )


def vstack(*blocks: QMatrix) -> QMatrix:
    cols = blocks[0].cols
    if any(block.cols != cols for block in blocks):
        raise DimensionMismatch("Blocks stacked vertically need equal column counts.")
    return QMatrix.from_rows(
        [list(block.row(i)) for block in blocks for i in range(block.rows)], cols
    )


def rref(
    rows: Sequence[Sequence[Rat]], column_order: Optional[Sequence[int]] = None
) -> Tuple[List[List[Rat]], List[int]]:
    """Reduced row echelon form with pivots searched in `column_order`.

    Returns the nonzero reduced rows and their pivot columns.
    """
    table = QMatrix.from_rows(rows) if rows else QMatrix.zeros(0, 0)
    if not table.rows or not table.cols:
        return [], []
    order = list(range(table.cols)) if column_order is None else list(column_order)
    if sorted(order) != list(range(table.cols)):
        raise DimensionMismatch("The column order must permute every column.")
    permuted = table.select_columns(order).to_sympy()
    reduced, pivots = permuted.rref()
    result = QMatrix.from_sympy(reduced[: len(pivots), :])
    place = {c: k for k, c in enumerate(order)}
    return (
        [
            [result[i, place[j]] for j in range(table.cols)]
            for i in range(result.rows)
        ],
        [order[k] for k in pivots],
    )


def rank(rows: Sequence[Sequence[Rat]]) -> int:
    return len(rref(rows)[0])


def matrix_rank(matrix: QMatrix) -> int:
    return rank(matrix.to_rows())


def nullspace(matrix: QMatrix) -> List[RatVector]:
    """A basis of {v : matrix * v = 0}, one vector per free column."""
    if not matrix.rows:
        return [
            tuple(Fraction(int(i == j)) for j in range(matrix.cols))
            for i in range(matrix.cols)
        ]
    return [
        tuple(from_sympy_rat(value) for value in vector)
        for vector in matrix.to_sympy().nullspace()
    ]


def solve_linear(matrix: QMatrix, rhs: Sequence[RatLike]) -> Optional[RatVector]:
    """Solve `matrix * x = rhs` exactly.

    Returns `None` when the system is inconsistent. Free variables of an
    underdetermined system are set to zero.
    """
    if len(rhs) != matrix.rows:
        raise DimensionMismatch(
            f"Right-hand side of length {len(rhs)} does not match "
            f"{matrix.rows} rows."
        )
    augmented = [
        list(matrix.row(i)) + [as_rat(rhs[i])] for i in range(matrix.rows)
    ]
    reduced, pivots = rref(augmented, range(matrix.cols + 1))
    if matrix.cols in pivots:
        return None
    solution = [Fraction(0)] * matrix.cols
    for row, p in zip(reduced, pivots):
        solution[p] = row[-1]
    return tuple(solution)
