"""Facet descriptions of polyhedral cones by the double description method.

A cone generated by finitely many vectors is described as

    {v : h . v >= 0 for every facet normal h, e . v = 0 for every equation e},

where the equations cut out the linear span of the generators and the facet
normals are the extreme rays of the dual cone inside that span.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import FrozenSet, List, Sequence, Tuple

from tvb.exceptions import DimensionMismatch
from tvb.exactmath.matrix import QMatrix, nullspace, rank, rref, solve_linear
from tvb.exactmath.rational import RatLike, as_vector, dot, vector_to_str
from tvb.types import RatVector

logger = logging.getLogger("tvb.exactmath")


def primitive(vector: Sequence[RatLike]) -> RatVector:
    """The positive multiple of `vector` with coprime integer entries."""
    values = as_vector(vector)
    if not any(values):
        return values
    scale = reduce(lambda m, q: m * q.denominator // gcd(m, q.denominator), values, 1)
    integers = [int(value * scale) for value in values]
    common = reduce(gcd, integers, 0)
    return tuple(Fraction(value, common) for value in integers)


@dataclass(frozen=True)
class ConeHRep:
    """
    An inequality description of a cone.

    * **inequalities** - Primitive facet normals h with h . v >= 0 on the cone.
    * **equations** - Primitive normals e of the span, e . v = 0 on the cone.
    """

    inequalities: Tuple[RatVector, ...]
    equations: Tuple[RatVector, ...]

    def contains(self, point: Sequence[RatLike]) -> bool:
        values = as_vector(point)
        return all(dot(h, values) >= 0 for h in self.inequalities) and all(
            dot(e, values) == 0 for e in self.equations
        )

    def to_json(self) -> dict:
        return {
            "inequalities": [vector_to_str(h) for h in self.inequalities],
            "equations": [vector_to_str(e) for e in self.equations],
        }


def _tight_rank(rows: Sequence[RatVector], tight: FrozenSet[int]) -> int:
    return rank([rows[k] for k in sorted(tight)]) if tight else 0


def cone_facets(generators: Sequence[Sequence[RatLike]]) -> ConeHRep:
    """H-representation of the cone spanned by `generators`."""
    vectors = [as_vector(g) for g in generators]
    if not vectors:
        raise DimensionMismatch("At least one generator is required.")
    dimension = len(vectors[0])
    if any(len(v) != dimension for v in vectors):
        raise DimensionMismatch("All generators need the same dimension.")

    kernel = nullspace(QMatrix.from_rows(vectors, dimension))
    equations = tuple(sorted(primitive(e) for e in kernel))
    span, _ = rref(vectors)
    size = len(span)
    if size == 0:
        return ConeHRep((), equations)

    # Constraints on coordinates t of h = sum t_k span_k.
    rows: List[RatVector] = []
    for vector in vectors:
        row = tuple(dot(vector, basis) for basis in span)
        if any(row):
            rows.append(row)

    start: List[int] = []
    for k, row in enumerate(rows):
        if rank([rows[j] for j in start] + [row]) > len(start):
            start.append(k)
        if len(start) == size:
            break
    square = QMatrix.from_rows([rows[k] for k in start], size)
    rays: List[Tuple[RatVector, FrozenSet[int]]] = []
    for position in range(size):
        unit = [Fraction(1 if k == position else 0) for k in range(size)]
        solution = solve_linear(square, unit)
        assert solution is not None
        tight = frozenset(start[k] for k in range(size) if k != position)
        rays.append((solution, tight))

    processed = set(start)
    for index, row in enumerate(rows):
        if index in processed:
            continue
        values = [dot(row, ray) for ray, _ in rays]
        positive = [(r, s) for r, s in zip(rays, values) if s > 0]
        negative = [(r, s) for r, s in zip(rays, values) if s < 0]
        following = [
            (ray, tight | {index} if s == 0 else tight)
            for (ray, tight), s in zip(rays, values)
            if s >= 0
        ]
        for (p, tight_p), sp in positive:
            for (q, tight_q), sq in negative:
                common = tight_p & tight_q
                if _tight_rank(rows, common) != size - 2:
                    continue
                ray = tuple(sp * x - sq * y for x, y in zip(q, p))
                following.append((ray, common | {index}))
        rays = following
        processed.add(index)
    logger.debug("Double description kept %s rays in dimension %s", len(rays), size)

    normals = set()
    for ray, _ in rays:
        h = [
            sum((t * basis[k] for t, basis in zip(ray, span)), Fraction(0))
            for k in range(dimension)
        ]
        normals.add(primitive(h))
    return ConeHRep(tuple(sorted(normals)), equations)
