"""The flag-bundle side of the Cox ring: Gel'fand-Zetlin generators, the map Psi
into Laurent polynomials in t and minors of a generic matrix y, and the
symbolic check that the incidence and exchange relations vanish under it.

Coordinates are indexed by subsets of {0..n}. A subset without 0 is P_tau and
is named `P` followed by its digits (`P13`); a subset with 0 is P_{0,tau} and is
named `P0` followed by the digits of tau (`P013`, `P0` for tau empty).
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from tvb.bundle import index_label, validate_weights, x_name
from tvb.exceptions import PreconditionError, VerificationError
from tvb.exactmath import SparsePoly, poly_determinant, poly_sum

logger = logging.getLogger("tvb.coxring")

FLAG_MAX_N = 4

Subset = Tuple[int, ...]


@dataclass(frozen=True)
class GZPattern:
    """
    A triangular array with rows of lengths n, n-1, ..., 1.

    * **rows** - `rows[i - 1][j - 1]` holds g_ij.
    """

    rows: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i - 1][j - 1]

    def __add__(self, other: "GZPattern") -> "GZPattern":
        return GZPattern(
            tuple(
                tuple(x + y for x, y in zip(left, right))
                for left, right in zip(self.rows, other.rows)
            )
        )

    @classmethod
    def zero(cls, n: int) -> "GZPattern":
        return cls(tuple((0,) * (n - i) for i in range(n)))

    def is_valid(self) -> bool:
        """The interlacing inequalities g_ij >= g_(i+1)j >= g_i(j+1)."""
        n = self.n
        for i in range(1, n):
            for j in range(1, n + 1 - i):
                if not self[i, j] >= self[i + 1, j] >= self[i, j + 1]:
                    return False
        return True

    def is_positive(self) -> bool:
        """Valid with g_1n = 0."""
        return self.is_valid() and self[1, self.n] == 0

    def to_json(self) -> List[List[str]]:
        return [[str(g) for g in row] for row in self.rows]


def _check_proper(tau: Iterable[int], n: int) -> FrozenSet[int]:
    subset = frozenset(tau)
    if not subset <= set(range(1, n + 1)):
        raise PreconditionError(f"Subset {sorted(subset)} is not inside [{n}].")
    if len(subset) >= n:
        raise PreconditionError(f"Subset {sorted(subset)} must be a proper subset.")
    return subset


def prefix_counts(tau: Iterable[int], n: int) -> Tuple[int, ...]:
    """|tau ∩ [n - i + 1]| for i = 1..n."""
    subset = frozenset(tau)
    return tuple(
        sum(1 for t in subset if t <= n - i + 1) for i in range(1, n + 1)
    )


def pattern_from_counts(counts: Sequence[int], n: int) -> GZPattern:
    return GZPattern(
        tuple(
            tuple(1 if j < counts[i] else 0 for j in range(n - i)) for i in range(n)
        )
    )


def subset_from_counts(counts: Sequence[int], n: int) -> FrozenSet[int]:
    # counts[i - 1] is the size of the prefix [n - i + 1]
    by_prefix = {n - i + 1: counts[i - 1] for i in range(1, n + 1)}
    by_prefix[0] = 0
    return frozenset(k for k in range(1, n + 1) if by_prefix[k] > by_prefix[k - 1])


def gz_generator(tau: Iterable[int], n: int) -> GZPattern:
    """The 0/1 pattern with |tau ∩ [n - i + 1]| ones leading row i."""
    subset = _check_proper(tau, n)
    return pattern_from_counts(prefix_counts(subset, n), n)


def gz_join(tau: Iterable[int], eta: Iterable[int], n: int) -> FrozenSet[int]:
    """The subset whose prefix counts are the larger of those of tau and eta."""
    left, right = prefix_counts(tau, n), prefix_counts(eta, n)
    return subset_from_counts([max(x, y) for x, y in zip(left, right)], n)


def gz_meet(tau: Iterable[int], eta: Iterable[int], n: int) -> FrozenSet[int]:
    left, right = prefix_counts(tau, n), prefix_counts(eta, n)
    return subset_from_counts([min(x, y) for x, y in zip(left, right)], n)


@dataclass(frozen=True)
class ExtGZElement:
    """
    An element of GZ_n x Z^(n+1).

    * **pattern** - The pattern component.
    * **charge** - The torus weight component.
    """

    pattern: GZPattern
    charge: Tuple[int, ...]

    def __add__(self, other: "ExtGZElement") -> "ExtGZElement":
        return ExtGZElement(
            self.pattern + other.pattern,
            tuple(x + y for x, y in zip(self.charge, other.charge)),
        )

    def scale(self, k: int) -> "ExtGZElement":
        result = ExtGZElement(
            GZPattern.zero(self.pattern.n), (0,) * len(self.charge)
        )
        for _ in range(k):
            result = result + self
        return result

    def to_json(self) -> Dict[str, object]:
        return {
            "pattern": self.pattern.to_json(),
            "charge": [str(c) for c in self.charge],
        }


def coordinate_name(subset: Iterable[int]) -> str:
    ordered = sorted(subset)
    if 0 in ordered:
        return "P0" + "".join(str(t) for t in ordered[1:])
    return "P" + "".join(str(t) for t in ordered)


def coordinate_subsets(n: int) -> List[Subset]:
    """All subsets of {0..n} of size 1..n-1, i.e. every P_tau and P_{0,tau}."""
    return [
        subset
        for size in range(1, n)
        for subset in combinations(range(n + 1), size)
    ]


def ext_gz_generators(a: Sequence[int]) -> Dict[str, ExtGZElement]:
    """Images of x_j, P_tau and P_{0,tau} in GZ_n x Z^(n+1)."""
    weights = validate_weights(a)
    n = len(weights) - 1
    zero = GZPattern.zero(n)
    table: Dict[str, ExtGZElement] = {}
    for j in range(n + 1):
        table[x_name(j)] = ExtGZElement(
            zero, tuple(-1 if k == j else 0 for k in range(n + 1))
        )
    for subset in coordinate_subsets(n):
        charge = tuple(weights[k] if k in subset else 0 for k in range(n + 1))
        tau = [t for t in subset if t]
        if 0 in subset:
            missing = min(k for k in range(1, n + 1) if k not in tau)
            pattern = gz_generator(tau + [missing], n)
        else:
            pattern = gz_generator(tau, n)
        table[coordinate_name(subset)] = ExtGZElement(pattern, charge)
    return table


def ext_gz_degree(a: Sequence[int], powers: Dict[str, int]) -> ExtGZElement:
    table = ext_gz_generators(a)
    n = len(a) - 1
    result = ExtGZElement(GZPattern.zero(n), (0,) * (n + 1))
    for name, e in powers.items():
        result = result + table[name].scale(e)
    return result


def ext_gz_contains(a: Sequence[int], target: ExtGZElement) -> bool:
    """Whether `target` lies in the semigroup generated by the images of x_j, P_tau
    and P_{0,tau}.

    Only finitely many P-generators fit under the pattern of `target`, and the
    ray generators x_j then absorb any excess charge.
    """
    table = ext_gz_generators(a)
    pieces = [element for name, element in table.items() if name.startswith("P")]
    memo: Dict[Tuple[int, GZPattern, Tuple[int, ...]], bool] = {}

    def search(
        index: int, pattern: GZPattern, charge: Tuple[int, ...]
    ) -> bool:
        if all(g == 0 for row in pattern.rows for g in row):
            return all(c <= 0 for c in charge)
        if index == len(pieces):
            return False
        key = (index, pattern, charge)
        if key not in memo:
            piece = pieces[index]
            found = search(index + 1, pattern, charge)
            rest = _subtract(pattern, piece.pattern)
            if not found and rest is not None:
                remaining = tuple(c - d for c, d in zip(charge, piece.charge))
                found = search(index, rest, remaining)
            memo[key] = found
        return memo[key]

    return search(0, target.pattern, target.charge)


def _subtract(left: GZPattern, right: GZPattern) -> Optional[GZPattern]:
    rows = tuple(
        tuple(x - y for x, y in zip(top, bottom))
        for top, bottom in zip(left.rows, right.rows)
    )
    if any(g < 0 for row in rows for g in row):
        return None
    return GZPattern(rows)


def t_name(j: int) -> str:
    return f"t{j}"


def y_entry(i: int, j: int) -> str:
    return f"y{index_label(i, j)}"


def _column(c: int, n: int) -> List[SparsePoly]:
    """Column c of the (n-1) x (n+1) matrix [s | y], s the sum of the y columns."""
    if c == 0:
        return [
            poly_sum(SparsePoly.var(y_entry(i, j)) for j in range(1, n + 1))
            for i in range(1, n)
        ]
    return [SparsePoly.var(y_entry(i, c)) for i in range(1, n)]


def flag_minor(columns: Sequence[int], n: int) -> SparsePoly:
    """The minor on the first len(columns) rows, columns taken in the given order."""
    table = [_column(c, n) for c in columns]
    size = len(columns)
    return poly_determinant(
        [[table[c][r] for c in range(size)] for r in range(size)]
    )


def torus_factor(subset: Iterable[int], a: Sequence[int]) -> SparsePoly:
    return SparsePoly.monomial({t_name(k): a[k] for k in subset})


def psi_image(a: Sequence[int], symbol: str) -> SparsePoly:
    """Psi(x_j) = t_j^-1; Psi(P_tau) = det[y(tau)] t^(a_tau); Psi(P_{0,tau}) is the
    minor with the column sum of y placed first, times t_0^(a_0) t^(a_tau)."""
    weights = validate_weights(a)
    n = len(weights) - 1
    if symbol.startswith("x"):
        j = int(symbol[1:])
        if not 0 <= j <= n:
            raise PreconditionError(f"Unknown variable {symbol}.")
        return SparsePoly.var(t_name(j), -1)
    subset = parse_coordinate(symbol, n)
    return flag_minor(subset, n) * torus_factor(subset, weights)


def parse_coordinate(symbol: str, n: int) -> Subset:
    if not symbol.startswith("P"):
        raise PreconditionError(f"Unknown variable {symbol}.")
    digits = symbol[1:]
    subset: List[int] = []
    if digits.startswith("0"):
        subset.append(0)
        digits = digits[1:]
    tau = [int(d) for d in digits]
    if any(not 1 <= t <= n for t in tau) or tau != sorted(set(tau)):
        raise PreconditionError(f"Malformed coordinate {symbol}.")
    subset.extend(tau)
    limit = n - 2 if 0 in subset else n - 1
    if len(tau) > limit or (not subset):
        raise PreconditionError(
            f"Coordinate {symbol} needs |tau| <= {limit}."
        )
    return tuple(subset)


def _sign_of_insertion(subset: Iterable[int], j: int) -> int:
    return -1 if sum(1 for t in subset if t < j) % 2 else 1


def incidence_relations(a: Sequence[int]) -> List[SparsePoly]:
    """x_0^(a_0) P_{0,tau} - sum over j not in tau of (-1)^#{t in tau: t < j}
    x_j^(a_j) P_{j tau}, for tau inside [n] with |tau| <= n - 2."""
    weights = validate_weights(a)
    n = len(weights) - 1
    relations = []
    for size in range(0, n - 1):
        for tau in combinations(range(1, n + 1), size):
            relation = SparsePoly.var(x_name(0), weights[0]) * SparsePoly.var(
                coordinate_name((0,) + tau)
            )
            for j in range(1, n + 1):
                if j in tau:
                    continue
                relation = relation - _sign_of_insertion(tau, j) * SparsePoly.var(
                    x_name(j), weights[j]
                ) * SparsePoly.var(coordinate_name(tau + (j,)))
            relations.append(relation)
    return relations


def exchange_relations(n: int) -> List[SparsePoly]:
    """Quadratic exchange relations among the flag coordinates.

    For I of size p - 1 and J = (j_0 < ... < j_q) with p <= q:
    sum_l (-1)^l P_{I + j_l} P_{J - j_l}, with P_{I + j_l} re-sorted.
    Relations that cancel formally are dropped.
    """
    relations = []
    for q in range(1, n):
        for p in range(1, q + 1):
            for index_set in combinations(range(n + 1), p - 1):
                for others in combinations(range(n + 1), q + 1):
                    relation = SparsePoly.constant(0)
                    for position, j in enumerate(others):
                        if j in index_set:
                            continue
                        sign = (-1) ** position * (
                            -1 if sum(1 for i in index_set if i > j) % 2 else 1
                        )
                        left = coordinate_name(index_set + (j,))
                        right = coordinate_name(tuple(k for k in others if k != j))
                        relation = relation + sign * SparsePoly.var(
                            left
                        ) * SparsePoly.var(right)
                    if not relation.is_zero() and relation not in relations:
                        if -relation not in relations:
                            relations.append(relation)
    return relations


def psi_images(a: Sequence[int]) -> Dict[str, SparsePoly]:
    weights = validate_weights(a)
    n = len(weights) - 1
    images = {x_name(j): psi_image(weights, x_name(j)) for j in range(n + 1)}
    for subset in coordinate_subsets(n):
        name = coordinate_name(subset)
        images[name] = psi_image(weights, name)
    return images


@dataclass(frozen=True)
class RelationCheck:
    kind: str
    relation: SparsePoly
    residue: SparsePoly

    @property
    def passed(self) -> bool:
        return self.residue.is_zero()

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "relation": str(self.relation),
            "residue": str(self.residue),
            "status": "PASS" if self.passed else "FAIL",
        }


@dataclass(frozen=True)
class FlagReport:
    a: Tuple[int, ...]
    checks: Tuple[RelationCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> Dict[str, object]:
        return {
            "a": [str(value) for value in self.a],
            "relations": [check.to_json() for check in self.checks],
            "incidence": str(sum(1 for c in self.checks if c.kind == "incidence")),
            "exchange": str(sum(1 for c in self.checks if c.kind == "exchange")),
            "status": "PASS" if self.passed else "FAIL",
        }


def verify_flag_relations(
    a: Sequence[int], strict: bool = True, calibrate: bool = True
) -> FlagReport:
    """Evaluate every incidence and exchange relation under Psi.

    The sign convention is first checked at a = (1, ..., 1); with `strict` a
    nonzero residue raises `VerificationError`.
    """
    weights = validate_weights(a)
    n = len(weights) - 1
    if n > FLAG_MAX_N:
        raise PreconditionError(f"Flag relation check supports n <= {FLAG_MAX_N}.")
    if calibrate and any(w != 1 for w in weights):
        unit = verify_flag_relations((1,) * (n + 1), strict=False, calibrate=False)
        if not unit.passed:
            raise VerificationError(
                "Sign convention fails at a = (1, ..., 1): "
                f"{unit.failures()[0].relation}"
            )
    images = psi_images(weights)
    checks = [
        RelationCheck("incidence", relation, relation.substitute(images))
        for relation in incidence_relations(weights)
    ]
    checks.extend(
        RelationCheck("exchange", relation, relation.substitute(images))
        for relation in exchange_relations(n)
    )
    report = FlagReport(weights, tuple(checks))
    logger.info(
        "Checked %s flag relations for a=%s: %s",
        len(checks),
        weights,
        "PASS" if report.passed else "FAIL",
    )
    if strict and not report.passed:
        failure = report.failures()[0]
        raise VerificationError(
            f"Relation {failure.relation} leaves residue {failure.residue}."
        )
    return report
