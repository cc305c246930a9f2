import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from tvb.bundle import build_pair, pairs, validate_weights, x_name, z_name
from tvb.coxring.presentation import Z, cox_ideal
from tvb.exceptions import PreconditionError, VerificationError
from tvb.exactmath import SparsePoly
from tvb.exactmath.rational import RatLike, as_rat, rat_to_str
from tvb.matroid import FlagOfFlats, close_flag, matroid_of
from tvb.tropic.trees import LabelledTree, _normalize
from tvb.types import Rat

logger = logging.getLogger("tvb.tropic")


@dataclass(frozen=True)
class TropPoint:
    """
    A point with one rational coordinate per Cox variable.

    * **coordinates** - `(name, value)` pairs, ray variables first.
    """

    coordinates: Tuple[Tuple[str, Rat], ...]

    def as_dict(self) -> Dict[str, Rat]:
        return dict(self.coordinates)

    def __getitem__(self, name: str) -> Rat:
        return self.as_dict()[name]

    def term_weights(self, poly: SparsePoly) -> Dict[Tuple[int, ...], Rat]:
        values = self.as_dict()
        missing = [name for name in poly.support() if name not in values]
        if missing:
            raise PreconditionError(f"The point has no coordinates {missing}.")
        return poly.weights_of_terms(lambda name: values.get(name, Fraction(0)))

    def violations(self, generators: Iterable[SparsePoly]) -> List[SparsePoly]:
        """Generators whose minimal term weight is attained only once."""
        failing = []
        for generator in generators:
            weights = list(self.term_weights(generator).values())
            if weights.count(min(weights)) < 2:
                failing.append(generator)
        return failing

    def is_zero(self) -> bool:
        return all(value == 0 for _, value in self.coordinates)

    def to_json(self) -> Dict[str, str]:
        return {name: rat_to_str(value) for name, value in self.coordinates}


def initial_forms(
    generators: Iterable[SparsePoly], point: TropPoint
) -> List[SparsePoly]:
    """For each generator, the sum of its terms of minimal weight."""
    forms = []
    for generator in generators:
        weights = point.term_weights(generator)
        if not weights:
            forms.append(generator)
            continue
        lowest = min(weights.values())
        forms.append(
            SparsePoly(
                generator.variables,
                {
                    exponent: coefficient
                    for exponent, coefficient in generator.terms.items()
                    if weights[exponent] == lowest
                },
            )
        )
    return forms


def dual_generators(a: Sequence[int]) -> Tuple[SparsePoly, ...]:
    return cox_ideal(a, "dual").generators


def trop_point_from_tree(
    tree: LabelledTree, a: Optional[Sequence[int]] = None, check: bool = True
) -> TropPoint:
    """x_i = -w(0, i+1) / a_i and Z_jk = -w(j+1, k+1) from path weights.

    With `check`, every generator of the dual Cox ideal must have its minimal
    term weight attained at least twice.
    """
    n = tree.leaves - 2
    weights = (1,) * (n + 1) if a is None else validate_weights(a)
    if len(weights) != n + 1:
        raise PreconditionError(
            f"A tree on {tree.leaves} leaves needs {tree.leaves - 1} weights."
        )
    coordinates: List[Tuple[str, Rat]] = [
        (x_name(i), -tree.path_weight(0, i + 1) / weights[i]) for i in range(n + 1)
    ]
    coordinates.extend(
        (Z(j, k), -tree.path_weight(j + 1, k + 1)) for j, k in pairs(n)
    )
    point = TropPoint(tuple(coordinates))
    if check:
        failing = point.violations(dual_generators(weights))
        if failing:
            raise VerificationError(
                f"The point is not tropical for {failing[0]}: {point.to_json()}"
            )
    return point


@dataclass(frozen=True)
class FlagTree:
    """
    The weighted tree attached to a flag of flats of the complete graph.

    * **tree** - The weighted trivalent tree on n+2 leaves.
    * **point** - Its tropical point, equal to the section of the flat-weight sum.
    * **u** - The flat-weight sum, one value per `z` column.
    * **permutation** - Vertices in the depth-first order of the merge hierarchy.
    """

    tree: LabelledTree
    point: TropPoint
    u: Tuple[Rat, ...]
    permutation: Tuple[int, ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "newick": self.tree.newick(),
            "point": self.point.to_json(),
            "u": [rat_to_str(value) for value in self.u],
            "permutation": [str(i) for i in self.permutation],
        }


def _blocks(flat: FrozenSet[str], n: int) -> List[FrozenSet[int]]:
    """Connected components on vertices 0..n of the edges z_ij in `flat`."""
    parent = list(range(n + 1))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in pairs(n):
        if z_name(i, j) in flat:
            parent[find(i)] = find(j)
    groups: Dict[int, set] = {}
    for i in range(n + 1):
        groups.setdefault(find(i), set()).add(i)
    return [frozenset(group) for group in groups.values()]


def dual_flag(
    n: int, chain: Union[FlagOfFlats, Sequence[Iterable[str]]]
) -> FlagOfFlats:
    if isinstance(chain, FlagOfFlats):
        chain = [sorted(flat) for flat in chain.flats]
    matroid = matroid_of(build_pair((1,) * (n + 1), "dual").L)
    return close_flag(matroid, chain)


def tree_from_flag(
    n: int,
    chain: Union[FlagOfFlats, Sequence[Iterable[str]]],
    v: Sequence[RatLike],
) -> FlagTree:
    """Build the tree of a maximal flag of flats of the graphic matroid of K_{n+1}.

    Each flat F_k merges two blocks of F_{k-1} into a cluster node. With h(C) the
    sum of v_k over the flats containing the cluster C, the edge from a cluster to
    its parent weighs h(C) - h(parent), a leaf hangs at weight -h(parent), the root
    meets leaf 0 at weight v_n, and every weight is then halved.
    """
    flag = dual_flag(n, chain)
    values = [as_rat(value) for value in v]
    if len(values) == n - 1:
        values.append(Fraction(0))
    if len(values) != n:
        raise PreconditionError(f"Expected {n} flat weights, got {len(values)}.")
    if any(value < 0 for value in values):
        raise PreconditionError("Flat weights must be non-negative.")

    leaves = n + 2
    node_of: Dict[FrozenSet[int], int] = {
        frozenset([i]): i + 1 for i in range(n + 1)
    }
    created: Dict[FrozenSet[int], int] = {frozenset([i]): 0 for i in range(n + 1)}
    children: Dict[FrozenSet[int], List[FrozenSet[int]]] = {}
    previous = [frozenset([i]) for i in range(n + 1)]
    for k, flat in enumerate(flag.flats, start=1):
        current = _blocks(flat, n)
        merged = [block for block in current if block not in previous]
        parts = [block for block in previous if block not in current]
        if len(merged) != 1 or len(parts) != 2:
            raise PreconditionError(f"Flat {k} does not merge exactly two blocks.")
        cluster = merged[0]
        node_of[cluster] = leaves + k - 1
        created[cluster] = k
        children[cluster] = sorted(parts, key=min)
        previous = current

    def height(cluster: FrozenSet[int]) -> Rat:
        start = max(created[cluster], 1)
        return sum(values[start - 1 :], Fraction(0))

    root = frozenset(range(n + 1))
    edges: List[Tuple[int, int]] = [(0, node_of[root])]
    weights: List[Rat] = [height(root)]
    order: List[int] = []

    def attach(cluster: FrozenSet[int]) -> None:
        for child in children[cluster]:
            edges.append((node_of[child], node_of[cluster]))
            if len(child) == 1:
                weights.append(-height(cluster))
                order.append(min(child))
            else:
                weights.append(height(child) - height(cluster))
                attach(child)

    attach(root)
    halved = {
        (min(edge), max(edge)): weight / 2 for edge, weight in zip(edges, weights)
    }
    ordered = _normalize(edges)
    tree = LabelledTree(leaves, ordered, tuple(halved[edge] for edge in ordered))
    point = trop_point_from_tree(tree)

    u = tuple(
        sum(
            (
                value
                for value, flat in zip(values, flag.flats)
                if z_name(i, j) in flat
            ),
            Fraction(0),
        )
        for i, j in pairs(n)
    )
    expected = {x_name(i): Fraction(0) for i in range(n + 1)}
    expected.update({Z(i, j): value for (i, j), value in zip(pairs(n), u)})
    if point.as_dict() != expected:
        raise VerificationError("The tree does not reproduce the flat-weight sum.")
    logger.debug("Flag tree %s with permutation %s", tree.newick(), order)
    return FlagTree(tree, point, u, tuple(order))
