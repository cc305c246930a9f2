"""Classifying pairs (L, D) of the irreducible rank-n bundles on projective space.

Columns of a diagram are the elements of a spanning set (`y0..yn` for the
bundle, `z01, z02, ...` for its dual) and rows are indexed by the rays
`e0..en` of the fan of P^n.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from typing_extensions import Literal

from tvb.exceptions import NonLinearGenerator, PreconditionError, VerificationError
from tvb.exactmath import QMatrix, SparsePoly, rref
from tvb.exactmath.rational import RatLike, as_rat
from tvb.types import Rat, RatVector, Variant, WeightVec

logger = logging.getLogger("tvb.bundle")

PairKind = Literal["primal", "dual", "custom"]

WEIGHTS_MESSAGE = "weights must be positive, need ≥ 3"


def validate_weights(a: Iterable[object]) -> WeightVec:
    """Return the weight vector as a tuple, rejecting short or non-positive input."""
    weights = tuple(a)
    if len(weights) < 3:
        raise PreconditionError(WEIGHTS_MESSAGE)
    for value in weights:
        if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
            raise PreconditionError(WEIGHTS_MESSAGE)
    return weights


def index_label(*indices: int) -> str:
    if all(i < 10 for i in indices):
        return "".join(str(i) for i in indices)
    return "_".join(str(i) for i in indices)


def y_name(i: int) -> str:
    return f"y{i}"


def z_name(i: int, j: int) -> str:
    return f"z{index_label(i, j)}"


def x_name(i: int) -> str:
    return f"x{i}"


def cox_name(column: str) -> str:
    """The Cox-ring generator attached to a spanning-set element (`z01` -> `Z01`)."""
    return column[0].upper() + column[1:]


def pairs(n: int) -> List[Tuple[int, int]]:
    """Index pairs i < j of {0..n} in lexicographic order."""
    return list(combinations(range(n + 1), 2))


@dataclass(frozen=True, eq=False)
class LinearIdeal:
    """
    An ideal generated by linear forms with exact rational coefficients.

    * **variables** - The ordered variable names.
    * **forms** - The coefficient vectors of the given generators.
    * **basis** - The reduced row echelon basis of their span, used for equality.
    """

    variables: Tuple[str, ...]
    forms: Tuple[RatVector, ...]
    basis: Tuple[RatVector, ...] = field(init=False)

    def __post_init__(self) -> None:
        for form in self.forms:
            if len(form) != len(self.variables):
                raise PreconditionError(
                    f"Linear form of length {len(form)} does not match "
                    f"{len(self.variables)} variables."
                )
        reduced, _ = rref(self.forms)
        object.__setattr__(self, "basis", tuple(tuple(row) for row in reduced))

    @classmethod
    def from_vectors(
        cls, variables: Sequence[str], forms: Iterable[Sequence[RatLike]]
    ) -> "LinearIdeal":
        return cls(
            tuple(variables),
            tuple(tuple(as_rat(value) for value in form) for form in forms),
        )

    @classmethod
    def from_polys(
        cls, variables: Sequence[str], polys: Iterable[SparsePoly]
    ) -> "LinearIdeal":
        variables = tuple(variables)
        forms = []
        for poly in polys:
            if not poly.is_linear_form():
                raise NonLinearGenerator(f"Generator {poly} is not a linear form.")
            form = [Fraction(0)] * len(variables)
            for powers, coefficient in poly.monomials():
                (name,) = powers
                if name not in variables:
                    raise NonLinearGenerator(f"Generator {poly} uses unknown {name}.")
                form[variables.index(name)] += coefficient
            forms.append(form)
        return cls.from_vectors(variables, forms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearIdeal):
            return NotImplemented
        return self.variables == other.variables and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.variables, self.basis))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def form_to_poly(self, form: Sequence[Rat]) -> SparsePoly:
        size = len(self.variables)
        return SparsePoly(
            self.variables,
            {
                tuple(1 if k == j else 0 for k in range(size)): value
                for j, value in enumerate(form)
                if value
            },
        )

    def generators(self) -> List[SparsePoly]:
        return [self.form_to_poly(form) for form in self.forms]

    def basis_polys(self) -> List[SparsePoly]:
        return [self.form_to_poly(form) for form in self.basis]

    def is_monomial(self) -> bool:
        """Whether the ideal is generated by variables."""
        return all(sum(1 for value in row if value) == 1 for row in self.basis)

    def variables_in(self) -> List[str]:
        """The variables contained in the ideal."""
        return [
            self.variables[j]
            for j in range(len(self.variables))
            if _contains_unit(self.basis, j)
        ]

    def to_json(self) -> List[str]:
        return [str(poly) for poly in self.generators()]


def _contains_unit(basis: Sequence[RatVector], j: int) -> bool:
    width = len(basis[0]) if basis else 0
    unit = [Fraction(1 if k == j else 0) for k in range(width)]
    if not basis:
        return False
    return len(rref(list(basis) + [unit])[0]) == len(basis)


class ClassDegree(NamedTuple):
    """A class (alpha, beta) in CL(P^n) x Z."""

    alpha: int
    beta: int

    def to_json(self) -> List[str]:
        return [str(self.alpha), str(self.beta)]


RAY_DEGREE = ClassDegree(-1, 0)


@dataclass(frozen=True)
class BundlePair:
    """
    A linear ideal together with a diagram of tropical points.

    * **variant** - `primal` for the bundle, `dual` for its dual, `custom` otherwise.
    * **vars** - Column labels of the diagram.
    * **L** - The linear ideal.
    * **D** - The diagram, one row per ray of the fan.
    * **a** - The weight vector the pair was built from, if any.
    * **nonnegative** - Whether every row of `D` has minimum zero.
    """

    variant: PairKind
    vars: Tuple[str, ...]
    L: LinearIdeal
    D: QMatrix
    a: Optional[Tuple[int, ...]] = None
    nonnegative: bool = False

    @property
    def n(self) -> int:
        return self.D.rows - 1

    @property
    def ray_count(self) -> int:
        return self.D.rows

    def column_index(self, name: str) -> int:
        return self.vars.index(name)

    def to_json(self) -> Dict[str, object]:
        return {
            "variant": self.variant,
            "vars": list(self.vars),
            "L_generators": self.L.to_json(),
            "D": self.D.to_json(),
            "nonnegative": self.nonnegative,
        }


def tropical_row_violations(pair: BundlePair) -> List[Tuple[int, str]]:
    """Rows of `D` whose minimum over some generator's support is attained once."""
    violations = []
    for i in range(pair.D.rows):
        row = pair.D.row(i)
        for form, poly in zip(pair.L.forms, pair.L.generators()):
            support = [row[j] for j, value in enumerate(form) if value]
            if len(support) < 2:
                # loops carry no finite condition
                continue
            lowest = min(support)
            if support.count(lowest) < 2:
                violations.append((i, str(poly)))
    return violations


def check_tropical_rows(pair: BundlePair) -> BundlePair:
    violations = tropical_row_violations(pair)
    if violations:
        row, generator = violations[0]
        raise VerificationError(
            f"Row {row} of the diagram is not on the tropicalization of {generator}."
        )
    return pair


def build_pair(a: Sequence[int], variant: Variant) -> BundlePair:
    """The classifying pair of the bundle (`primal`) or its dual (`dual`)."""
    weights = validate_weights(a)
    n = len(weights) - 1
    if variant == "primal":
        variables = tuple(y_name(i) for i in range(n + 1))
        ideal = LinearIdeal.from_vectors(variables, [[1] * (n + 1)])
        diagram = QMatrix.from_rows(
            [[weights[i] if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
        )
    elif variant == "dual":
        index_pairs = pairs(n)
        variables = tuple(z_name(i, j) for i, j in index_pairs)
        position = {p: k for k, p in enumerate(index_pairs)}
        forms = []
        for i, j, k in combinations(range(n + 1), 3):
            form = [0] * len(index_pairs)
            form[position[(i, k)]] = 1
            form[position[(i, j)]] = -1
            form[position[(j, k)]] = -1
            forms.append(form)
        ideal = LinearIdeal.from_vectors(variables, forms)
        diagram = QMatrix.from_rows(
            [
                [-weights[ell] if ell in p else 0 for p in index_pairs]
                for ell in range(n + 1)
            ]
        )
    else:
        raise PreconditionError(
            f"Unknown variant {variant!r}. Choices are: primal|dual"
        )
    pair = BundlePair(
        variant, variables, ideal, diagram, weights, nonnegative=variant == "primal"
    )
    logger.debug("Built %s pair for a=%s", variant, weights)
    return check_tropical_rows(pair)


def custom_pair(
    variables: Sequence[str],
    forms: Iterable[Sequence[RatLike]],
    diagram: Iterable[Iterable[RatLike]],
) -> BundlePair:
    """A pair from explicit data, used for split and degenerate bundles."""
    variables = tuple(variables)
    matrix = QMatrix.from_rows(diagram, len(variables))
    pair = BundlePair(
        "custom",
        variables,
        LinearIdeal.from_vectors(variables, forms),
        matrix,
        None,
        nonnegative=_rows_have_zero_min(matrix),
    )
    return check_tropical_rows(pair)


def _rows_have_zero_min(matrix: QMatrix) -> bool:
    return all(min(matrix.row(i)) == 0 for i in range(matrix.rows) if matrix.cols)


def nonnegative_form(pair: BundlePair) -> BundlePair:
    """Shift each row of the diagram by a constant so its minimum is zero."""
    if not pair.D.cols:
        return pair
    shifted = QMatrix.from_rows(
        [
            [value - min(pair.D.row(i)) for value in pair.D.row(i)]
            for i in range(pair.D.rows)
        ],
        pair.D.cols,
    )
    return BundlePair(pair.variant, pair.vars, pair.L, shifted, pair.a, True)


def column_degrees(pair: BundlePair) -> List[ClassDegree]:
    """Degrees (d_j, 1) of the column generators, d_j the column sum of the
    non-negative diagram."""
    pair = nonnegative_form(pair)
    degrees = []
    for j in range(pair.D.cols):
        total = sum(pair.D.column(j), Fraction(0))
        if total.denominator != 1:
            raise PreconditionError("Diagram entries must be integers.")
        degrees.append(ClassDegree(int(total), 1))
    return degrees


def degree_table(pair: BundlePair) -> Dict[str, ClassDegree]:
    """Class degrees of all Cox generators: ray variables then column variables."""
    table = {x_name(i): RAY_DEGREE for i in range(pair.ray_count)}
    for column, degree in zip(pair.vars, column_degrees(pair)):
        table[cox_name(column)] = degree
    return table

