"""Newton-Okounkov data of a flag of flats.

For a pair (L, D) in non-negative form and a maximal flag with indicator matrix
E_K, the block matrix

    M = [ D    -I ]
        [ E_K   0 ]

sends the orthant of (column, ray) coordinates onto the global body, and the
polytope of a class (alpha, beta) onto its divisor body.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from tvb.bundle import BundlePair, column_degrees, validate_weights, x_name
from tvb.exceptions import (
    DimensionMismatch,
    InvalidFlag,
    PreconditionError,
    ResourceCapExceeded,
)
from tvb.exactmath import (
    ConeHRep,
    LPStatus,
    QMatrix,
    cone_facets,
    hstack,
    in_convex_hull,
    linear_program,
    lp_is_extreme,
    solve_linear,
    vstack,
)
from tvb.exactmath.rational import RatLike, as_vector, vector_to_str
from tvb.matroid import FlagOfFlats, close_flag, matroid_of
from tvb.tropic.points import FlagTree, dual_generators, initial_forms, tree_from_flag
from tvb.tropic.semigroup import DEFAULT_MONOMIAL_CAP, semigroup_ST
from tvb.tropic.wellpoised import MAX_CHECK_DEGREE, MAX_CHECK_N, oracle_disagreement
from tvb.types import Direction, RatVector

logger = logging.getLogger("tvb.nokbody")

DEFAULT_HREP_DIMENSION_CAP = 8
MAX_VERTEX_EQUATIONS = 3

Chain = Union[FlagOfFlats, Sequence[Iterable[Union[int, str]]]]


@dataclass(frozen=True)
class FlagMatrix:
    """
    The indicator matrix of a flag, full set first.

    * **E** - One 0/1 row per member, the largest member on top.
    * **columns** - Column labels, those of the pair.
    * **members** - The chain from the smallest member up, as column labels.
    """

    E: QMatrix
    columns: Tuple[str, ...]
    members: Tuple[Tuple[str, ...], ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "E": self.E.to_json(),
            "columns": list(self.columns),
            "flag": [list(member) for member in self.members],
        }


def _indicator(columns: Sequence[str], member: Iterable[str]) -> List[int]:
    chosen = set(member)
    return [1 if column in chosen else 0 for column in columns]


def _primal_chain(pair: BundlePair, chain: Chain) -> List[Tuple[str, ...]]:
    if isinstance(chain, FlagOfFlats):
        chain = [sorted(flat) for flat in chain.flats]
    n = pair.n
    if len(chain) not in (n - 1, n):
        raise InvalidFlag(
            f"A primal chain needs {n - 1} or {n} members, got {len(chain)}."
        )
    members: List[Tuple[str, ...]] = []
    previous: frozenset = frozenset()
    for size, subset in enumerate(chain, start=1):
        labels = []
        for element in subset:
            if isinstance(element, str) and element in pair.vars:
                labels.append(element)
            elif isinstance(element, int) and 0 <= element < len(pair.vars):
                labels.append(pair.vars[element])
            else:
                raise InvalidFlag(f"Unknown element {element!r} in flag.")
        current = frozenset(labels)
        if len(current) != size:
            raise InvalidFlag(f"Member {size} of the chain must have size {size}.")
        if not previous < current:
            raise InvalidFlag(f"Member {size} does not contain its predecessor.")
        members.append(tuple(column for column in pair.vars if column in current))
        previous = current
    return members


def flag_matrix(pair: BundlePair, chain: Chain) -> FlagMatrix:
    """Indicator rows of the chain, printed with the full set first.

    A primal chain A_1 < ... < A_k lists subsets with |A_i| = i; the row of the
    full set is added on top. Any other pair takes a chain of flats of the
    matroid of L, closed and completed to a maximal flag.
    """
    if pair.variant == "primal":
        members = _primal_chain(pair, chain)
        rows = [[1] * len(pair.vars)]
    else:
        if isinstance(chain, FlagOfFlats):
            chain = [sorted(flat) for flat in chain.flats]
        matroid = matroid_of(pair.L)
        flag = close_flag(matroid, [[str(e) for e in member] for member in chain])
        members = [
            tuple(column for column in pair.vars if column in flat)
            for flat in flag.flats
        ]
        rows = []
    rows.extend(_indicator(pair.vars, member) for member in reversed(members))
    E = QMatrix.from_rows(rows, len(pair.vars))
    matrix = FlagMatrix(E, pair.vars, tuple(members))
    logger.debug("Flag matrix with %s rows for %s", matrix.E.rows, pair.variant)
    return matrix


@dataclass(frozen=True)
class NOKMatrix:
    """
    The block matrix [D -I; E_K 0].

    * **M** - The matrix, (R + r) x (m + R).
    * **ray_count** - R, one ray coordinate per ray of the fan.
    * **columns** - Column labels: the pair's columns, then `x0..x{R-1}`.
    """

    M: QMatrix
    ray_count: int
    columns: Tuple[str, ...]

    @property
    def flag_rows(self) -> int:
        return self.M.rows - self.ray_count

    def to_json(self) -> Dict[str, object]:
        return {
            "M": self.M.to_json(),
            "columns": list(self.columns),
            "ray_rows": str(self.ray_count),
            "flag_rows": str(self.flag_rows),
        }


def build_M(pair: BundlePair, flag: FlagMatrix) -> NOKMatrix:
    if not pair.nonnegative:
        raise PreconditionError("The diagram must be in non-negative form.")
    if flag.E.cols != pair.D.cols:
        raise DimensionMismatch(
            f"The flag matrix has {flag.E.cols} columns, the diagram {pair.D.cols}."
        )
    rays = pair.ray_count
    identity = QMatrix.identity(rays)
    negated = QMatrix(rays, rays, tuple(-value for value in identity.entries))
    M = vstack(
        hstack(pair.D, negated),
        hstack(flag.E, QMatrix.zeros(flag.E.rows, rays)),
    )
    columns = tuple(pair.vars) + tuple(x_name(i) for i in range(rays))
    return NOKMatrix(M, rays, columns)


@dataclass(frozen=True)
class GlobalBody:
    """
    The cone M applied to the non-negative orthant.

    * **generators** - The distinct columns of M.
    * **hrep** - Its facet description, when one was requested.
    """

    generators: Tuple[RatVector, ...]
    hrep: Optional[ConeHRep] = None

    def to_json(self) -> Dict[str, object]:
        document: Dict[str, object] = {
            "generators": [vector_to_str(g) for g in self.generators]
        }
        if self.hrep is not None:
            document["hrep"] = self.hrep.to_json()
        return document


def global_body(
    nok: NOKMatrix, hrep: bool = False, cap: int = DEFAULT_HREP_DIMENSION_CAP
) -> GlobalBody:
    generators: List[RatVector] = []
    for column in nok.M.columns():
        if column not in generators:
            generators.append(column)
    if not hrep:
        return GlobalBody(tuple(generators))
    if nok.M.rows > cap:
        raise ResourceCapExceeded(
            f"Facet descriptions are limited to dimension {cap}, got {nok.M.rows}."
        )
    return GlobalBody(tuple(generators), cone_facets(generators))


@dataclass(frozen=True)
class Polytope:
    """
    A polytope given by equations over the non-negative orthant, or by vertices.

    * **labels** - Coordinate names.
    * **equations** - Rows of A in {u >= 0, A u = b}; `None` for a vertex list.
    * **rhs** - The right-hand side b.
    * **points** - The vertices of a V-representation.
    """

    labels: Tuple[str, ...]
    equations: Optional[Tuple[RatVector, ...]] = None
    rhs: RatVector = ()
    points: Tuple[RatVector, ...] = ()

    @property
    def is_hrep(self) -> bool:
        return self.equations is not None

    def to_json(self) -> Dict[str, object]:
        if self.equations is not None:
            return {
                "labels": list(self.labels),
                "equations": [vector_to_str(row) for row in self.equations],
                "rhs": vector_to_str(self.rhs),
            }
        return {
            "labels": list(self.labels),
            "vertices": [vector_to_str(point) for point in self.points],
        }


def divisor_polytope(pair: BundlePair, alpha: int, beta: int) -> Polytope:
    """{(y, x) >= 0 : sum y_j = beta, sum d_j y_j - sum x_i = alpha}."""
    degrees = [degree.alpha for degree in column_degrees(pair)]
    rays = pair.ray_count
    equations = (
        as_vector([1] * len(degrees) + [0] * rays),
        as_vector(degrees + [-1] * rays),
    )
    labels = tuple(pair.vars) + tuple(x_name(i) for i in range(rays))
    return Polytope(labels, equations, as_vector([beta, alpha]))


def is_bounded(polytope: Polytope) -> bool:
    if polytope.equations is None:
        return True
    cost = [-1] * len(polytope.labels)
    result = linear_program(polytope.equations, polytope.rhs, cost)
    return result.status is not LPStatus.UNBOUNDED


def vertices(polytope: Polytope, require_bounded: bool = True) -> List[RatVector]:
    """Basic feasible solutions of {u >= 0, A u = b}, sorted."""
    if polytope.equations is None:
        return list(polytope.points)
    equations = polytope.equations
    if len(equations) > MAX_VERTEX_EQUATIONS:
        raise PreconditionError(
            f"Vertex enumeration supports at most {MAX_VERTEX_EQUATIONS} equations."
        )
    if require_bounded and not is_bounded(polytope):
        raise PreconditionError("The polytope is unbounded.")
    size = len(polytope.labels)
    found: List[RatVector] = []
    for count in range(len(equations) + 1):
        for support in combinations(range(size), count):
            if count == 0:
                if any(polytope.rhs):
                    continue
                point: RatVector = (Fraction(0),) * size
            else:
                block = QMatrix.from_rows(
                    [[row[j] for j in support] for row in equations], count
                )
                solution = solve_linear(block, polytope.rhs)
                if solution is None or any(value < 0 for value in solution):
                    continue
                values = [Fraction(0)] * size
                for j, value in zip(support, solution):
                    values[j] = value
                point = tuple(values)
            if point not in found:
                found.append(point)
    logger.debug("Found %s vertices", len(found))
    return sorted(found)


def nok_divisor_body(
    pair: BundlePair, chain: Chain, alpha: int, beta: int
) -> Polytope:
    """Image of the divisor polytope under M, reduced to its extreme points."""
    nok = build_M(pair, flag_matrix(pair, chain))
    images: List[RatVector] = []
    for vertex in vertices(divisor_polytope(pair, alpha, beta)):
        image = nok.M.apply(vertex)
        if image not in images:
            images.append(image)
    extreme = [p for k, p in enumerate(images) if lp_is_extreme(images, k)]
    labels = tuple(f"ray{i}" for i in range(nok.ray_count)) + tuple(
        f"flat{k}" for k in range(nok.flag_rows, 0, -1)
    )
    logger.info(
        "Divisor body (%s, %s) has %s vertices", alpha, beta, len(extreme)
    )
    return Polytope(labels, points=tuple(sorted(extreme)))


def phi_and_section(
    pair: BundlePair, point: Sequence[RatLike], direction: Direction
) -> RatVector:
    """phi(v, m) = v + m D, and s(v) = (v, 0)."""
    values = as_vector(point)
    columns = pair.D.cols
    rays = pair.ray_count
    if direction == "s":
        if len(values) != columns:
            raise DimensionMismatch(
                f"s takes {columns} coordinates, got {len(values)}."
            )
        return values + (Fraction(0),) * rays
    if direction == "phi":
        if len(values) != columns + rays:
            raise DimensionMismatch(
                f"phi takes {columns + rays} coordinates, got {len(values)}."
            )
        v, m = values[:columns], values[columns:]
        return tuple(
            v[j] + sum((m[i] * pair.D[i, j] for i in range(rays)), Fraction(0))
            for j in range(columns)
        )
    raise PreconditionError(f"Unknown direction {direction!r}. Choices are: phi|s")


def is_superadditive(
    pair: BundlePair,
    chain: Chain,
    first: Tuple[int, int],
    second: Tuple[int, int],
) -> bool:
    """Whether body(first) + body(second) lies in body(first + second)."""
    left = nok_divisor_body(pair, chain, *first).points
    right = nok_divisor_body(pair, chain, *second).points
    total = nok_divisor_body(
        pair, chain, first[0] + second[0], first[1] + second[1]
    ).points
    for p in left:
        for q in right:
            if not in_convex_hull(total, [x + y for x, y in zip(p, q)]):
                return False
    return True


class FlagStatus(enum.Enum):
    """
    Whether the cone of a dual flag consists of prime points, up to a degree.

    * **VALID** - The initial forms at the flag's point generate the toric ideal
    of its tree in every degree up to the bound.

    * **INVALID** - Some initial form is not a binomial or some fiber disagrees.
    """

    VALID = enum.auto()
    INVALID = enum.auto()


@dataclass(frozen=True)
class FlagValidity:
    flag_tree: FlagTree
    forms: Tuple[str, ...]
    degree: int
    status: FlagStatus
    reason: Optional[str] = None

    def to_json(self) -> Dict[str, object]:
        document: Dict[str, object] = {
            "tree": self.flag_tree.to_json(),
            "initial_forms": list(self.forms),
            "status": self.status.name,
            "label": f"verified up to degree {self.degree}",
        }
        if self.reason is not None:
            document["reason"] = self.reason
        return document


def flag_validity(
    a: Sequence[int],
    chain: Chain,
    v: Optional[Sequence[RatLike]] = None,
    degree: int = 2,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> FlagValidity:
    """Check a dual flag and the primeness proxy of the point it produces."""
    weights = validate_weights(a)
    n = len(weights) - 1
    if n > MAX_CHECK_N or not 1 <= degree <= MAX_CHECK_DEGREE:
        raise PreconditionError(
            f"Flag validity supports n <= {MAX_CHECK_N} and "
            f"1 <= degree <= {MAX_CHECK_DEGREE}."
        )
    values = [1] * n if v is None else list(v)
    if any(Fraction(value) <= 0 for value in values):
        raise PreconditionError("Flat weights must be positive.")
    flag_tree = tree_from_flag(n, chain, values)
    forms = initial_forms(dual_generators(weights), flag_tree.point)
    labels = tuple(str(form) for form in forms)
    reason = oracle_disagreement(
        semigroup_ST(flag_tree.tree, weights), forms, degree, cap
    )
    status = FlagStatus.VALID if reason is None else FlagStatus.INVALID
    return FlagValidity(flag_tree, labels, degree, status, reason)
