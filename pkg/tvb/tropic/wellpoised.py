import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tvb.bundle import validate_weights
from tvb.exceptions import PreconditionError
from tvb.exactmath import SparsePoly, rank
from tvb.tropic.points import dual_generators, initial_forms, trop_point_from_tree
from tvb.tropic.semigroup import (
    DEFAULT_MONOMIAL_CAP,
    TreeSemigroup,
    fibers,
    semigroup_ST,
)
from tvb.tropic.trees import LabelledTree, enumerate_trees
from tvb.types import Exponent, Rat

logger = logging.getLogger("tvb.tropic")

MAX_CHECK_N = 3
MAX_CHECK_DEGREE = 4
REDRAWS = 3


class CheckStatus(enum.Enum):
    """
    Outcome of comparing the initial ideal of one tree with its toric oracle.

    * **PASS** - Every initial form is a binomial inside one fiber and the ideal
    they generate has the oracle's dimension in every fiber up to the degree bound.

    * **FAIL** - Some fiber disagrees or no generic weight choice was found.
    """

    PASS = enum.auto()
    FAIL = enum.auto()


def wellpoised_hypersurface(p: SparsePoly) -> bool:
    """Disjoint supports and gcd one for the exponents of every pair of terms."""
    if len(p) < 2:
        raise PreconditionError("A hypersurface check needs at least two terms.")
    exponents = [exponent for exponent, _ in p]
    for first, second in combinations(exponents, 2):
        if any(e and f for e, f in zip(first, second)):
            return False
        if reduce(gcd, first + second, 0) != 1:
            return False
    return True


def _primes() -> Iterator[int]:
    found: List[int] = []
    candidate = 2
    while True:
        if all(candidate % prime for prime in found):
            found.append(candidate)
            yield candidate
        candidate += 1


def generic_weights(tree: LabelledTree, attempt: int = 0) -> LabelledTree:
    """Distinct primes on the internal edges, zero on the leaf edges.

    Each further attempt shifts the run of primes by one.
    """
    internal = [
        index for index in range(len(tree.edges)) if tree.is_internal(index)
    ]
    primes = _primes()
    for _ in range(attempt):
        next(primes)
    values = {index: Fraction(next(primes)) for index in internal}
    return LabelledTree(
        tree.leaves,
        tree.edges,
        tuple(values.get(index, Fraction(0)) for index in range(len(tree.edges))),
    )


@dataclass(frozen=True)
class TreeCheck:
    """
    The verdict for one labelled tree.

    * **tree_id** - Position of the tree in the canonical enumeration.
    * **newick** - The weighted tree used for the check.
    * **status** - PASS or FAIL.
    * **degree** - The degree bound of the comparison.
    * **binomials** - The initial forms of the Cox generators.
    * **reason** - Why the check failed, if it did.
    """

    tree_id: int
    newick: str
    status: CheckStatus
    degree: int
    binomials: Tuple[str, ...]
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_json(self) -> Dict[str, object]:
        document: Dict[str, object] = {
            "tree_id": f"T{self.tree_id}",
            "newick": self.newick,
            "status": self.status.name,
            "label": f"verified up to degree {self.degree}",
            "initial_forms": list(self.binomials),
        }
        if self.reason is not None:
            document["reason"] = self.reason
        return document


@dataclass(frozen=True)
class WellPoisedReport:
    a: Tuple[int, ...]
    degree: int
    checks: Tuple[TreeCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> Dict[str, object]:
        return {
            "a": [str(value) for value in self.a],
            "degree": str(self.degree),
            "status": "PASS" if self.passed else "FAIL",
            "trees": [check.to_json() for check in self.checks],
        }


def _terms(
    semigroup: TreeSemigroup, form: SparsePoly
) -> List[Tuple[Exponent, Rat]]:
    return [
        (semigroup.exponent_of(powers), coefficient)
        for powers, coefficient in form.monomials()
    ]


def fiber_mismatches(
    semigroup: TreeSemigroup,
    forms: Sequence[SparsePoly],
    degree: int,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> List[Tuple[Rat, int, int]]:
    """Compare the ideal of binomial `forms` with the toric ideal fiber by fiber.

    In a fiber F the toric ideal has dimension |F| - 1. The ideal of the forms
    is spanned there by the products m * form whose terms land in F. Returns
    `(degree, expected, found)` for every fiber where the dimensions differ.
    """
    binomials = [_terms(semigroup, form) for form in forms]
    mismatches = []
    for members in fibers(semigroup, degree, cap).values():
        if len(members) < 2:
            continue
        position = {member: k for k, member in enumerate(members)}
        rows = []
        for member in members:
            for (u, cu), (v, cv) in binomials:
                if all(e >= f for e, f in zip(member, u)):
                    other = tuple(e - f + g for e, f, g in zip(member, u, v))
                    row = [Fraction(0)] * len(members)
                    row[position[member]] += cu
                    row[position[other]] += cv
                    rows.append(row)
        found = rank(rows) if rows else 0
        if found != len(members) - 1:
            mismatches.append(
                (semigroup.degree(members[0]), len(members) - 1, found)
            )
    return mismatches


def oracle_disagreement(
    semigroup: TreeSemigroup,
    forms: Sequence[SparsePoly],
    degree: int,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> Optional[str]:
    """Why the binomial `forms` fail to match the toric oracle, or `None`."""
    for form in forms:
        if len(form) != 2:
            return f"initial form {form} is not a binomial"
        (u, _), (v, _) = _terms(semigroup, form)
        if semigroup.image(u) != semigroup.image(v):
            return f"initial form {form} leaves its fiber"
    mismatches = fiber_mismatches(semigroup, forms, degree, cap)
    if mismatches:
        at, expected, found = mismatches[0]
        return f"fiber in degree {at} has rank {found}, expected {expected}"
    return None


def check_tree(
    tree_id: int,
    tree: LabelledTree,
    a: Sequence[int],
    degree: int,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> TreeCheck:
    semigroup = semigroup_ST(tree, a)
    generators = dual_generators(a)
    for attempt in range(REDRAWS):
        weighted = generic_weights(tree, attempt)
        point = trop_point_from_tree(weighted, a)
        forms = initial_forms(generators, point)
        if all(len(form) == 2 for form in forms):
            break
        logger.debug("Redrawing weights for tree T%s, attempt %s", tree_id, attempt)
    else:
        return TreeCheck(
            tree_id,
            weighted.newick(),
            CheckStatus.FAIL,
            degree,
            tuple(str(form) for form in forms),
            f"no generic weights after {REDRAWS} attempts",
        )
    labels = tuple(str(form) for form in forms)
    reason = oracle_disagreement(semigroup, forms, degree, cap)
    status = CheckStatus.PASS if reason is None else CheckStatus.FAIL
    return TreeCheck(tree_id, weighted.newick(), status, degree, labels, reason)


def _check_tree_task(
    task: Tuple[int, LabelledTree, Tuple[int, ...], int, int]
) -> TreeCheck:
    return check_tree(*task)


def wellpoised_check(
    a: Sequence[int],
    degree: int,
    workers: int = 1,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> WellPoisedReport:
    """Check every labelled trivalent tree on n+2 leaves against its toric oracle."""
    weights = validate_weights(a)
    n = len(weights) - 1
    if n > MAX_CHECK_N or not 1 <= degree <= MAX_CHECK_DEGREE:
        raise PreconditionError(
            f"The well-poised check supports n <= {MAX_CHECK_N} and "
            f"1 <= degree <= {MAX_CHECK_DEGREE}."
        )
    tasks = [
        (tree_id, tree, weights, degree, cap)
        for tree_id, tree in enumerate(enumerate_trees(n + 2))
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(_check_tree_task, tasks))
    else:
        checks = [_check_tree_task(task) for task in tasks]
    for check in checks:
        if check.passed:
            logger.info("Tree T%s %s: PASS", check.tree_id, check.newick)
        else:
            logger.warning(
                "Tree T%s %s: FAIL (%s)", check.tree_id, check.newick, check.reason
            )
    return WellPoisedReport(weights, degree, tuple(checks))
