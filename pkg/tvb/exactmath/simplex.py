import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from tvb.exceptions import DimensionMismatch
from tvb.exactmath.rational import RatLike, as_rat
from tvb.types import Rat, RatVector

logger = logging.getLogger("tvb.exactmath")


class LPStatus(enum.Enum):
    """
    The outcome of an exact linear program.

    * **OPTIMAL** - A basic optimal solution was found.
    * **INFEASIBLE** - The constraint set is empty.
    * **UNBOUNDED** - The objective decreases without bound on the constraint set.
    """

    OPTIMAL = enum.auto()
    INFEASIBLE = enum.auto()
    UNBOUNDED = enum.auto()


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    solution: Optional[RatVector] = None
    value: Optional[Rat] = None


class _Tableau:
    """A simplex tableau in canonical form for its basis, pivoting by Bland's rule."""

    def __init__(self, rows: List[List[Rat]], basis: List[int]) -> None:
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        lead = self.rows[r][c]
        self.rows[r] = [value / lead for value in self.rows[r]]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                factor = row[c]
                self.rows[i] = [x - factor * y for x, y in zip(row, self.rows[r])]
        self.basis[r] = c
        self.pivots += 1

    def minimize(self, cost: Sequence[Rat], allowed: int) -> LPStatus:
        while True:
            entering = None
            for j in range(allowed):
                if j in self.basis:
                    continue
                reduced = cost[j] - sum(
                    (cost[b] * row[j] for b, row in zip(self.basis, self.rows)),
                    Fraction(0),
                )
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return LPStatus.OPTIMAL
            leaving = None
            best: Optional[Rat] = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leaving])
                    ):
                        best = ratio
                        leaving = i
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)

    def solution(self, size: int) -> RatVector:
        values = [Fraction(0)] * size
        for b, row in zip(self.basis, self.rows):
            if b < size:
                values[b] = row[-1]
        return tuple(values)


def linear_program(
    equations: Sequence[Sequence[RatLike]],
    rhs: Sequence[RatLike],
    cost: Optional[Sequence[RatLike]] = None,
) -> LPResult:
    """Minimize `cost . u` subject to `equations * u = rhs` and `u >= 0`.

    Two-phase simplex with Bland's rule over exact rationals. Without a cost
    vector only feasibility is decided.
    """
    if len(equations) != len(rhs):
        raise DimensionMismatch(
            f"{len(equations)} equations but {len(rhs)} right-hand sides."
        )
    size = len(equations[0]) if equations else (len(cost) if cost else 0)
    if any(len(row) != size for row in equations):
        raise DimensionMismatch("All equations need the same number of unknowns.")
    goal = [as_rat(value) for value in cost] if cost else [Fraction(0)] * size
    if len(goal) != size:
        raise DimensionMismatch("Cost vector does not match the unknowns.")

    m = len(equations)
    rows: List[List[Rat]] = []
    for i, (row, b) in enumerate(zip(equations, rhs)):
        values = [as_rat(value) for value in row]
        target = as_rat(b)
        if target < 0:
            values = [-value for value in values]
            target = -target
        artificial = [Fraction(1 if k == i else 0) for k in range(m)]
        rows.append(values + artificial + [target])
    if not rows:
        if any(value < 0 for value in goal):
            return LPResult(LPStatus.UNBOUNDED)
        return LPResult(LPStatus.OPTIMAL, (Fraction(0),) * size, Fraction(0))

    tableau = _Tableau(rows, [size + i for i in range(m)])
    phase_one = [Fraction(0)] * size + [Fraction(1)] * m
    tableau.minimize(phase_one, size + m)
    infeasibility = sum(
        (row[-1] for b, row in zip(tableau.basis, tableau.rows) if b >= size),
        Fraction(0),
    )
    if infeasibility > 0:
        logger.debug("Infeasible after %s pivots", tableau.pivots)
        return LPResult(LPStatus.INFEASIBLE)

    for i in reversed(range(len(tableau.rows))):
        if tableau.basis[i] < size:
            continue
        column = next(
            (j for j in range(size) if tableau.rows[i][j] != 0), None
        )
        if column is None:
            del tableau.rows[i]
            del tableau.basis[i]
        else:
            tableau.pivot(i, column)
    tableau.rows = [row[:size] + [row[-1]] for row in tableau.rows]

    if not tableau.rows:
        if any(value < 0 for value in goal):
            return LPResult(LPStatus.UNBOUNDED)
        return LPResult(LPStatus.OPTIMAL, (Fraction(0),) * size, Fraction(0))

    status = tableau.minimize(goal, size)
    if status is LPStatus.UNBOUNDED:
        return LPResult(status)
    solution = tableau.solution(size)
    value = sum((c * u for c, u in zip(goal, solution)), Fraction(0))
    logger.debug("Optimal after %s pivots", tableau.pivots)
    return LPResult(LPStatus.OPTIMAL, solution, value)


def is_feasible(
    equations: Sequence[Sequence[RatLike]], rhs: Sequence[RatLike]
) -> bool:
    return linear_program(equations, rhs).status is LPStatus.OPTIMAL


def in_convex_hull(points: Sequence[Sequence[Rat]], target: Sequence[Rat]) -> bool:
    """Whether `target` is a convex combination of `points`."""
    if not points:
        return False
    dimension = len(target)
    if any(len(point) != dimension for point in points):
        raise DimensionMismatch("All points need the dimension of the target.")
    equations = [[point[k] for point in points] for k in range(dimension)]
    equations.append([Fraction(1)] * len(points))
    return is_feasible(equations, list(target) + [Fraction(1)])


def lp_is_extreme(points: Sequence[Sequence[RatLike]], index: int) -> bool:
    """True iff `points[index]` is not a convex combination of the other points."""
    if not points:
        raise DimensionMismatch("At least one point is required.")
    if not 0 <= index < len(points):
        raise DimensionMismatch(
            f"Index {index} out of range for {len(points)} points."
        )
    vectors = [tuple(as_rat(value) for value in point) for point in points]
    if len({len(vector) for vector in vectors}) != 1:
        raise DimensionMismatch("All points need the same dimension.")
    others = vectors[:index] + vectors[index + 1 :]
    return not in_convex_hull(others, vectors[index])
