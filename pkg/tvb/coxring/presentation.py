import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from tvb.bundle import (
    ClassDegree,
    build_pair,
    cox_name,
    degree_table,
    index_label,
    nonnegative_form,
    pairs,
    validate_weights,
    x_name,
    z_name,
)
from tvb.exceptions import PreconditionError, VerificationError
from tvb.exactmath import SparsePoly
from tvb.types import Variant

logger = logging.getLogger("tvb.coxring")

PHI_MAX_N = 5


def Z(i: int, j: int) -> str:
    return cox_name(z_name(i, j))


def P(i: int, j: int) -> str:
    """The Pluecker coordinate P_ij of Gr(2, n+2)."""
    return f"P{index_label(i, j)}"


def var(name: str, power: int = 1) -> SparsePoly:
    return SparsePoly.var(name, power)


@dataclass(frozen=True)
class CoxPresentation:
    """
    Generators of the Cox ideal of the projectivized bundle.

    * **a** - The weight vector.
    * **variant** - `primal` or `dual`.
    * **variables** - Ray variables `x0..xn` followed by `Y0..Yn` or `Z01, Z02, ...`.
    * **generators** - The ideal generators.
    * **degrees** - The class of every variable in CL(P^n) x Z.
    """

    a: Tuple[int, ...]
    variant: Variant
    variables: Tuple[str, ...]
    generators: Tuple[SparsePoly, ...]
    degrees: Dict[str, ClassDegree]

    def degree_of(self, powers: Dict[str, int]) -> ClassDegree:
        alpha = sum(self.degrees[name].alpha * e for name, e in powers.items())
        beta = sum(self.degrees[name].beta * e for name, e in powers.items())
        return ClassDegree(alpha, beta)

    def generator_degree(self, generator: SparsePoly) -> ClassDegree:
        """The common class of the terms of `generator`."""
        found = {self.degree_of(powers) for powers, _ in generator.monomials()}
        if len(found) != 1:
            raise VerificationError(f"Generator {generator} is not homogeneous.")
        return found.pop()

    def is_homogeneous(self, generator: SparsePoly) -> bool:
        try:
            self.generator_degree(generator)
        except VerificationError:
            return False
        return True

    def to_json(self) -> Dict[str, object]:
        return {
            "a": [str(value) for value in self.a],
            "variant": self.variant,
            "variables": list(self.variables),
            "degrees": {name: d.to_json() for name, d in self.degrees.items()},
            "generators": [str(g) for g in self.generators],
        }


def three_term(a: Sequence[int], i: int, j: int, k: int) -> SparsePoly:
    """x_j^{a_j} Z_ik - x_k^{a_k} Z_ij - x_i^{a_i} Z_jk for i < j < k."""
    return (
        var(x_name(j), a[j]) * var(Z(i, k))
        - var(x_name(k), a[k]) * var(Z(i, j))
        - var(x_name(i), a[i]) * var(Z(j, k))
    )


def plucker_quadric(
    names: Dict[Tuple[int, int], str], i: int, j: int, k: int, m: int
) -> SparsePoly:
    return (
        var(names[(i, j)]) * var(names[(k, m)])
        - var(names[(i, k)]) * var(names[(j, m)])
        + var(names[(i, m)]) * var(names[(j, k)])
    )


def cox_ideal(a: Sequence[int], variant: Variant) -> CoxPresentation:
    weights = validate_weights(a)
    n = len(weights) - 1
    pair = nonnegative_form(build_pair(weights, variant))
    degrees = degree_table(pair)
    variables = tuple(degrees)
    generators: List[SparsePoly] = []
    if variant == "primal":
        total = SparsePoly.constant(0)
        for j in range(n + 1):
            total = total + var(x_name(j), weights[j]) * var(f"Y{j}")
        generators.append(total)
    else:
        for i, j, k in combinations(range(n + 1), 3):
            generators.append(three_term(weights, i, j, k))
        names = {(i, j): Z(i, j) for i, j in pairs(n)}
        for i, j, k, m in combinations(range(n + 1), 4):
            generators.append(plucker_quadric(names, i, j, k, m))
    generators = [g.align(variables) for g in generators]
    presentation = CoxPresentation(
        weights, variant, variables, tuple(generators), degrees
    )
    for generator in generators:
        presentation.generator_degree(generator)
    logger.debug(
        "Cox ideal of %s a=%s has %s generators", variant, weights, len(generators)
    )
    return presentation


def phi_images(a: Sequence[int]) -> Dict[str, SparsePoly]:
    """P_{0,i+1} -> x_i^{a_i} and P_{j+1,k+1} -> Z_jk."""
    n = len(a) - 1
    images = {P(0, i + 1): var(x_name(i), a[i]) for i in range(n + 1)}
    for j, k in pairs(n):
        images[P(j + 1, k + 1)] = var(Z(j, k))
    return images


def phi_map(a: Sequence[int], q: SparsePoly) -> SparsePoly:
    weights = validate_weights(a)
    images = phi_images(weights)
    unknown = [name for name in q.support() if name not in images]
    if unknown:
        raise PreconditionError(f"Unknown variables {unknown} for the substitution.")
    return q.substitute(images)


def plucker_generators(size: int) -> List[SparsePoly]:
    """The quadratic Pluecker relations of Gr(2, size)."""
    names = {(i, j): P(i, j) for i, j in combinations(range(size), 2)}
    return [
        plucker_quadric(names, i, j, k, m)
        for i, j, k, m in combinations(range(size), 4)
    ]


@dataclass(frozen=True)
class PhiCorrespondence:
    plucker: SparsePoly
    image: SparsePoly
    generator: SparsePoly
    sign: int

    def to_json(self) -> Dict[str, object]:
        return {
            "plucker": str(self.plucker),
            "image": str(self.image),
            "generator": str(self.generator),
            "sign": str(self.sign),
        }


def verify_phi_generators(a: Sequence[int]) -> List[PhiCorrespondence]:
    """Match the images of the Pluecker relations with the dual Cox generators."""
    weights = validate_weights(a)
    n = len(weights) - 1
    if n > PHI_MAX_N:
        raise PreconditionError(f"Substitution check supports n <= {PHI_MAX_N}.")
    generators = cox_ideal(weights, "dual").generators
    lookup: Dict[tuple, Tuple[int, int]] = {}
    for position, generator in enumerate(generators):
        lookup[generator.key()] = (position, 1)
        lookup[(-generator).key()] = (position, -1)
    used = set()
    result = []
    for relation in plucker_generators(n + 2):
        image = phi_map(weights, relation)
        if image.key() not in lookup:
            raise VerificationError(f"Image {image} of {relation} is not a generator.")
        position, sign = lookup[image.key()]
        if position in used:
            raise VerificationError(f"Generator {generators[position]} hit twice.")
        used.add(position)
        result.append(PhiCorrespondence(relation, image, generators[position], sign))
    if len(used) != len(generators):
        raise VerificationError("Some Cox generators are not images of relations.")
    return result
