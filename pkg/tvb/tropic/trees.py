"""Labelled trivalent trees with optional rational edge weights.

Leaves are the nodes `0..N-1`; internal nodes are numbered from `N` upwards.
Two trees have the same shape iff they have the same set of splits, where the
split of an edge is the set of leaves on the side away from leaf 0.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from tvb.exceptions import PreconditionError
from tvb.exactmath.rational import RatLike, as_rat, rat_to_str
from tvb.types import Rat

Edge = Tuple[int, int]
Split = FrozenSet[int]

MIN_LEAVES = 4
MAX_LEAVES = 7


@dataclass(frozen=True)
class LabelledTree:
    """
    A trivalent tree whose leaves are labelled 0..N-1.

    * **leaves** - The leaf count N.
    * **edges** - Node pairs `(u, v)` with `u < v`.
    * **weights** - One weight per edge, aligned with `edges`, or `None`.
    """

    leaves: int
    edges: Tuple[Edge, ...]
    weights: Optional[Tuple[Rat, ...]] = None

    def __post_init__(self) -> None:
        nodes = {node for edge in self.edges for node in edge}
        if len(self.edges) != len(nodes) - 1:
            raise PreconditionError("A tree on k nodes has k - 1 edges.")
        degree: Dict[int, int] = {node: 0 for node in nodes}
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        for node, count in degree.items():
            expected = 1 if node < self.leaves else 3
            if count != expected:
                raise PreconditionError(
                    f"Node {node} has degree {count}, expected {expected}."
                )
        if set(range(self.leaves)) - nodes:
            raise PreconditionError("Every leaf label must occur.")
        if len(self._reachable(0, None)) != len(nodes):
            raise PreconditionError("The edges do not form a connected tree.")
        if self.weights is not None and len(self.weights) != len(self.edges):
            raise PreconditionError("One weight per edge is required.")

    def _adjacency(self) -> Dict[int, List[Tuple[int, int]]]:
        adjacency: Dict[int, List[Tuple[int, int]]] = {}
        for index, (u, v) in enumerate(self.edges):
            adjacency.setdefault(u, []).append((v, index))
            adjacency.setdefault(v, []).append((u, index))
        return adjacency

    def _reachable(self, start: int, blocked: Optional[int]) -> FrozenSet[int]:
        adjacency = self._adjacency()
        seen = {start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for other, index in adjacency.get(node, []):
                if index != blocked and other not in seen:
                    seen.add(other)
                    queue.append(other)
        return frozenset(seen)

    def split(self, index: int) -> Split:
        """Leaves on the side of edge `index` that does not contain leaf 0."""
        zero_side = self._reachable(0, index)
        return frozenset(
            leaf for leaf in range(self.leaves) if leaf not in zero_side
        )

    def splits(self) -> Tuple[Split, ...]:
        return tuple(self.split(index) for index in range(len(self.edges)))

    def is_internal(self, index: int) -> bool:
        u, v = self.edges[index]
        return u >= self.leaves and v >= self.leaves

    def internal_splits(self) -> FrozenSet[Split]:
        return frozenset(
            self.split(index)
            for index in range(len(self.edges))
            if self.is_internal(index)
        )

    def same_shape(self, other: "LabelledTree") -> bool:
        return (
            self.leaves == other.leaves
            and self.internal_splits() == other.internal_splits()
        )

    def path(self, i: int, j: int) -> List[int]:
        """Indices of the edges on the path between leaves i and j."""
        adjacency = self._adjacency()
        previous: Dict[int, Tuple[int, int]] = {}
        seen = {i}
        queue = deque([i])
        while queue:
            node = queue.popleft()
            if node == j:
                break
            for other, index in adjacency[node]:
                if other not in seen:
                    seen.add(other)
                    previous[other] = (node, index)
                    queue.append(other)
        edges = []
        node = j
        while node != i:
            node, index = previous[node]
            edges.append(index)
        return sorted(edges)

    def path_indicator(self, i: int, j: int) -> Tuple[int, ...]:
        on_path = set(self.path(i, j))
        return tuple(1 if k in on_path else 0 for k in range(len(self.edges)))

    def path_weight(self, i: int, j: int) -> Rat:
        if self.weights is None:
            raise PreconditionError("The tree carries no edge weights.")
        return sum((self.weights[k] for k in self.path(i, j)), Fraction(0))

    def with_weights(self, weights: Mapping[Split, RatLike]) -> "LabelledTree":
        """Assign weights by split; edges missing from `weights` get 0."""
        return LabelledTree(
            self.leaves,
            self.edges,
            tuple(as_rat(weights.get(split, 0)) for split in self.splits()),
        )

    def newick(self) -> str:
        """Newick string rooted at the neighbour of leaf 0, children ordered by
        their smallest leaf."""
        adjacency = self._adjacency()
        root = adjacency[0][0][0]

        def label(index: int) -> str:
            if self.weights is None:
                return ""
            return f":{rat_to_str(self.weights[index])}"

        def smallest(node: int, parent: int) -> int:
            if node < self.leaves:
                return node
            return min(
                smallest(other, node) for other, _ in adjacency[node] if other != parent
            )

        def render(node: int, parent: int, index: int) -> str:
            if node < self.leaves:
                return f"{node}{label(index)}"
            children = sorted(
                (
                    (smallest(other, node), other, k)
                    for other, k in adjacency[node]
                    if other != parent
                )
            )
            inner = ",".join(render(other, node, k) for _, other, k in children)
            return f"({inner}){label(index)}"

        children = sorted(
            (smallest(other, root), other, k) for other, k in adjacency[root]
        )
        inner = ",".join(render(other, root, k) for _, other, k in children)
        return f"({inner});"

    def splits_json(self) -> List[List[str]]:
        ordered = sorted(sorted(split) for split in self.internal_splits())
        return [[str(leaf) for leaf in split] for split in ordered]


def _normalize(edges: Sequence[Edge]) -> Tuple[Edge, ...]:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def star() -> LabelledTree:
    """The tree on leaves 0, 1, 2 joined at one internal node."""
    return LabelledTree(3, _normalize([(0, 3), (1, 3), (2, 3)]))


def insert_leaf(tree: LabelledTree, leaf: int, index: int, leaves: int) -> LabelledTree:
    """Subdivide edge `index` with a new internal node and hang `leaf` from it.

    Internal nodes are renumbered so that they start at `leaves`.
    """
    old_leaves = tree.leaves
    shift = leaves - old_leaves

    def move(node: int) -> int:
        return node if node < old_leaves else node + shift

    edges = [(move(u), move(v)) for u, v in tree.edges]
    node = max([leaves - 1] + [max(edge) for edge in edges]) + 1
    u, v = edges.pop(index)
    edges.extend([(u, node), (node, v), (leaf, node)])
    return LabelledTree(leaves, _normalize(edges))


def enumerate_trees(leaves: int) -> List[LabelledTree]:
    """All (2N-5)!! labelled trivalent trees on N leaves, by leaf insertion."""
    if not MIN_LEAVES <= leaves <= MAX_LEAVES:
        raise PreconditionError(
            f"Leaf count must lie in {MIN_LEAVES}..{MAX_LEAVES}, got {leaves}."
        )
    trees = [star()]
    for leaf in range(3, leaves):
        grown = []
        for tree in trees:
            for index in range(len(tree.edges)):
                grown.append(insert_leaf(tree, leaf, index, leaf + 1))
        trees = grown
    unique: Dict[FrozenSet[Split], LabelledTree] = {}
    for tree in trees:
        unique.setdefault(tree.internal_splits(), tree)
    return sorted(
        unique.values(), key=lambda t: sorted(sorted(s) for s in t.internal_splits())
    )


def caterpillar(order: Sequence[int]) -> LabelledTree:
    """The caterpillar with leaves in `order`: the first two and the last two
    form cherries and every other leaf hangs off the spine."""
    leaves = len(order)
    if leaves < MIN_LEAVES - 1:
        raise PreconditionError("A caterpillar needs at least three leaves.")
    spine = list(range(leaves, 2 * leaves - 2))
    edges = [(order[0], spine[0]), (order[1], spine[0])]
    for k, leaf in enumerate(order[2:-1]):
        edges.append((leaf, spine[k + 1]))
    edges.append((order[-1], spine[-1]))
    edges.extend((spine[k], spine[k + 1]) for k in range(len(spine) - 1))
    return LabelledTree(leaves, _normalize(edges))
