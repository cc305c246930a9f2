"""The semigroups S_T(a) of leaf-path indicator vectors and a degree-bounded
oracle for their toric ideals.

Generators are named after the Cox variables they correspond to: `x{i}` is
(1/a_i) p_{0,i+1} and `Z{j}{k}` is p_{j+1,k+1}. The grading deg x_i = 1/a_i,
deg Z_jk = 1 is half the total weight the image puts on leaf edges, so every
fiber of the semigroup map lies in a single degree.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from tvb.bundle import pairs, validate_weights, x_name
from tvb.coxring.presentation import Z
from tvb.exceptions import PreconditionError, ResourceCapExceeded
from tvb.exactmath import SparsePoly
from tvb.tropic.trees import LabelledTree
from tvb.types import Exponent, Rat, RatVector

logger = logging.getLogger("tvb.tropic")

DEFAULT_MONOMIAL_CAP = 200_000
MAX_ORACLE_DEGREE = 6
MAX_ORACLE_N = 4


@dataclass(frozen=True)
class TreeSemigroup:
    """
    The affine semigroup S_T(a) inside Q^E(T).

    * **tree** - The labelled trivalent tree on n+2 leaves.
    * **a** - The weights; all ones gives S_T.
    * **names** - Generator names, `x0..xn` then `Z01, Z02, ...`.
    * **generators** - The vector of each generator, indexed like `tree.edges`.
    * **degrees** - The grading of each generator.
    """

    tree: LabelledTree
    a: Tuple[int, ...]
    names: Tuple[str, ...]
    generators: Dict[str, RatVector]
    degrees: Dict[str, Rat]

    @property
    def n(self) -> int:
        return self.tree.leaves - 2

    def image(self, exponent: Sequence[int]) -> RatVector:
        total = [Fraction(0)] * len(self.tree.edges)
        for name, e in zip(self.names, exponent):
            if e:
                for k, value in enumerate(self.generators[name]):
                    if value:
                        total[k] += e * value
        return tuple(total)

    def degree(self, exponent: Sequence[int]) -> Rat:
        return sum(
            (e * self.degrees[name] for name, e in zip(self.names, exponent)),
            Fraction(0),
        )

    def exponent_of(self, powers: Mapping[str, int]) -> Exponent:
        unknown = [name for name in powers if name not in self.degrees]
        if unknown:
            raise PreconditionError(f"Unknown generators {unknown}.")
        return tuple(powers.get(name, 0) for name in self.names)

    def to_json(self) -> Dict[str, object]:
        return {
            "newick": self.tree.newick(),
            "generators": {
                name: [str(value) for value in vector]
                for name, vector in self.generators.items()
            },
        }


def semigroup_ST(
    tree: LabelledTree, a: Optional[Sequence[int]] = None
) -> TreeSemigroup:
    n = tree.leaves - 2
    weights = (1,) * (n + 1) if a is None else validate_weights(a)
    if len(weights) != n + 1:
        raise PreconditionError(
            f"A tree on {tree.leaves} leaves needs {tree.leaves - 1} weights."
        )
    generators: Dict[str, RatVector] = {}
    degrees: Dict[str, Rat] = {}
    for i in range(n + 1):
        scale = Fraction(1, weights[i])
        generators[x_name(i)] = tuple(
            scale * value for value in tree.path_indicator(0, i + 1)
        )
        degrees[x_name(i)] = scale
    for j, k in pairs(n):
        generators[Z(j, k)] = tuple(
            Fraction(value) for value in tree.path_indicator(j + 1, k + 1)
        )
        degrees[Z(j, k)] = Fraction(1)
    return TreeSemigroup(tree, weights, tuple(generators), generators, degrees)


def enumerate_monomials(
    degrees: Sequence[Rat], bound: Rat, cap: int = DEFAULT_MONOMIAL_CAP
) -> List[Exponent]:
    """Every exponent vector of weighted degree at most `bound`."""
    found: List[Exponent] = []
    size = len(degrees)

    def extend(position: int, prefix: List[int], remaining: Rat) -> None:
        if position == size:
            if len(found) >= cap:
                raise ResourceCapExceeded(
                    f"More than {cap} monomials below degree {bound}."
                )
            found.append(tuple(prefix))
            return
        e = 0
        while e * degrees[position] <= remaining:
            prefix.append(e)
            extend(position + 1, prefix, remaining - e * degrees[position])
            prefix.pop()
            e += 1

    extend(0, [], Fraction(bound))
    return found


def fibers(
    semigroup: TreeSemigroup, degree: int, cap: int = DEFAULT_MONOMIAL_CAP
) -> Dict[RatVector, List[Exponent]]:
    """Monomials of degree at most `degree`, grouped by their image."""
    buckets: Dict[RatVector, List[Exponent]] = {}
    weights = [semigroup.degrees[name] for name in semigroup.names]
    for exponent in enumerate_monomials(weights, Fraction(degree), cap):
        buckets.setdefault(semigroup.image(exponent), []).append(exponent)
    for members in buckets.values():
        members.sort(reverse=True)
    return buckets


def _check_oracle_scale(semigroup: TreeSemigroup, degree: int) -> None:
    if degree > MAX_ORACLE_DEGREE or semigroup.n > MAX_ORACLE_N:
        raise PreconditionError(
            f"The toric oracle supports degree <= {MAX_ORACLE_DEGREE} and "
            f"n <= {MAX_ORACLE_N}."
        )


def toric_ideal_upto(
    semigroup: TreeSemigroup, degree: int, cap: int = DEFAULT_MONOMIAL_CAP
) -> List[SparsePoly]:
    """Binomials u_1 - u_k spanning the toric ideal in every degree up to `degree`."""
    _check_oracle_scale(semigroup, degree)
    binomials = []
    for members in fibers(semigroup, degree, cap).values():
        first = members[0]
        for other in members[1:]:
            binomials.append(
                SparsePoly(semigroup.names, {first: 1, other: -1})
            )
    binomials.sort(key=lambda b: (semigroup.degree(max(b.terms)), b.key()))
    logger.debug(
        "Toric oracle found %s binomials up to degree %s", len(binomials), degree
    )
    return binomials
