"""Monoids of divisor classes in CL(P^n) x Z = Z^2.

Classes are integer pairs (alpha, beta). The ray variables have class (-1, 0)
and the column variable j has class (d_j, 1), d_j the j-th column sum of the
diagram in non-negative form.
"""
import enum
import logging
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from tvb.bundle import (
    RAY_DEGREE,
    BundlePair,
    build_pair,
    column_degrees,
    nonnegative_form,
    validate_weights,
)
from tvb.exceptions import PreconditionError, VerificationError
from tvb.matroid import facet_initial, hyperplane_complements, matroid_of
from tvb.types import Variant

logger = logging.getLogger("tvb.positivity")

DEFAULT_BOX_RADIUS = 50
FUJITA_MAX_N = 5

Point = Tuple[int, int]

RAY_CLASS: Point = (RAY_DEGREE.alpha, RAY_DEGREE.beta)


def cross(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def extended_euclid(a: int, b: int) -> Tuple[int, int]:
    """Coefficients (x, y) with a x + b y = gcd(a, b)."""
    if b == 0:
        return (1 if a >= 0 else -1, 0)
    x, y = extended_euclid(b, a % b)
    return (y, x - (a // b) * y)


def primitive_point(point: Point) -> Point:
    common = reduce(gcd, point, 0)
    if common == 0:
        raise PreconditionError("The zero vector spans no ray.")
    return (point[0] // common, point[1] // common)


@dataclass(frozen=True)
class Cone2D:
    """
    A strongly convex rational cone in the plane.

    * **start** - Primitive generator of the clockwise boundary ray.
    * **end** - Primitive generator of the counterclockwise boundary ray; equal to
    `start` for a single ray.
    """

    start: Point
    end: Point

    def __post_init__(self) -> None:
        if cross(self.start, self.end) < 0:
            raise PreconditionError("Boundary rays must run counterclockwise.")
        if cross(self.start, self.end) == 0 and self.start != self.end:
            raise PreconditionError("The cone is not strongly convex.")

    @classmethod
    def spanned_by(cls, points: Sequence[Point]) -> "Cone2D":
        rays = sorted({primitive_point(p) for p in points if p != (0, 0)})
        if not rays:
            raise PreconditionError("A cone needs a nonzero generator.")
        start = [r for r in rays if all(cross(r, s) >= 0 for s in rays)]
        end = [r for r in rays if all(cross(s, r) >= 0 for s in rays)]
        if len(start) != 1 or len(end) != 1:
            raise PreconditionError("The generators span no strongly convex cone.")
        return cls(start[0], end[0])

    @property
    def rays(self) -> Tuple[Point, ...]:
        if self.start == self.end:
            return (self.start,)
        return (self.start, self.end)

    def contains(self, point: Point) -> bool:
        if self.start == self.end:
            return cross(self.start, point) == 0 and (
                self.start[0] * point[0] + self.start[1] * point[1] >= 0
            )
        return cross(self.start, point) >= 0 and cross(point, self.end) >= 0

    def intersect(self, other: "Cone2D") -> Optional["Cone2D"]:
        """The intersection, or `None` when it is the origin alone."""
        candidates = [r for r in self.rays if other.contains(r)]
        candidates += [r for r in other.rays if self.contains(r)]
        if not candidates:
            return None
        return Cone2D.spanned_by(candidates)

    def _successor(self, w: Point) -> Point:
        # Lattice points p with cross(w, p) = 1 lie on p0 + t w; take the
        # smallest t that stays inside the cone.
        x, y = extended_euclid(w[0], -w[1])
        p0 = (y, x)
        step = cross(w, self.end)
        t = -(cross(p0, self.end) // step)
        return (p0[0] + t * w[0], p0[1] + t * w[1])

    def hilbert_basis(self) -> List[Point]:
        """Minimal generators of the lattice points of the cone, from start to end.

        Consecutive elements have determinant one; each is the lattice point of
        determinant one with the previous element that lies closest to `end`.
        """
        basis = [self.start]
        while basis[-1] != self.end:
            basis.append(self._successor(basis[-1]))
        return basis

    def to_json(self) -> List[List[str]]:
        return [[str(c) for c in ray] for ray in self.rays]


@dataclass(frozen=True)
class Monoid2D:
    """
    The monoid generated by finitely many classes.

    * **generators** - The generating classes.
    """

    generators: Tuple[Point, ...]
    _memo: Dict[Tuple[int, Point], bool] = field(
        default_factory=dict, compare=False, repr=False
    )

    @cached_property
    def cone(self) -> Cone2D:
        return Cone2D.spanned_by(self.generators)

    def hilbert_basis(self) -> List[Point]:
        return self._hilbert_basis

    @cached_property
    def _hilbert_basis(self) -> List[Point]:
        return self.cone.hilbert_basis()

    def is_saturated(self) -> bool:
        return all(self._reachable(h) for h in self.hilbert_basis())

    def contains(self, point: Point) -> bool:
        if point == (0, 0):
            return True
        cone = self.cone
        if not cone.contains(point):
            return False
        if set(self._hilbert_basis) <= set(self.generators):
            return True
        return self._reachable(point)

    def _reachable(self, point: Point) -> bool:
        """Bounded search for a non-negative integer combination."""
        cone = self.cone
        gens = [g for g in self.generators if g != (0, 0)]

        def search(index: int, rest: Point) -> bool:
            if rest == (0, 0):
                return True
            if index == len(gens) or not cone.contains(rest):
                return False
            key = (index, rest)
            if key not in self._memo:
                g = gens[index]
                found = False
                current = rest
                while cone.contains(current):
                    if search(index + 1, current):
                        found = True
                        break
                    current = (current[0] - g[0], current[1] - g[1])
                self._memo[key] = found
            return self._memo[key]

        return search(0, point)

    def is_subset_of(self, other: "Monoid2D") -> bool:
        return all(other.contains(g) for g in self.generators)

    def to_json(self) -> Dict[str, object]:
        return {
            "generators": [[str(c) for c in g] for g in self.generators],
            "cone": self.cone.to_json(),
        }


@dataclass(frozen=True)
class SpMonoid:
    """
    A corner monoid Z>=0{(-1, 0), (d_j, 1)}.

    * **facet** - The facet of the fan, `None` for a column of a split bundle.
    * **element** - The column omitted by the maximal flat.
    * **monoid** - The monoid.
    """

    facet: Optional[int]
    element: str
    monoid: Monoid2D

    def to_json(self) -> Dict[str, object]:
        document = self.monoid.to_json()
        document["facet"] = None if self.facet is None else str(self.facet)
        document["element"] = self.element
        return document


def corner_monoid(degree: int) -> Monoid2D:
    generators = (RAY_CLASS, (degree, 1))
    if abs(cross(*generators)) != 1:
        raise VerificationError(f"The corner monoid of degree {degree} is not smooth.")
    return Monoid2D(generators)


def sp_monoids(pair: BundlePair) -> List[SpMonoid]:
    """One corner monoid per facet and maximal flat of its initial matroid."""
    degrees = dict(zip(pair.vars, (d.alpha for d in column_degrees(pair))))
    monoids = []
    for facet in range(pair.ray_count):
        matroid = matroid_of(facet_initial(pair, facet))
        for element, _ in hyperplane_complements(matroid):
            monoids.append(SpMonoid(facet, element, corner_monoid(degrees[element])))
    logger.info("Collected %s corner monoids", len(monoids))
    return monoids


@dataclass(frozen=True)
class BpfMonoid:
    """
    An intersection of corner monoids.

    * **monoid** - Generated by the Hilbert basis of the intersected cone.
    * **sources** - The intersected corner monoids.
    * **missing** - Lattice points of the cone, in the test box, outside some source.
    * **box_radius** - Half the side of the test box.
    """

    monoid: Monoid2D
    sources: Tuple[SpMonoid, ...]
    missing: Tuple[Point, ...]
    box_radius: int

    @property
    def saturated(self) -> bool:
        return not self.missing

    def to_json(self) -> Dict[str, object]:
        return {
            "hilbert_basis": [[str(c) for c in g] for g in self.monoid.generators],
            "cone": self.monoid.cone.to_json(),
            "missing": [[str(c) for c in p] for p in self.missing],
            "box_radius": str(self.box_radius),
            "saturated": self.saturated,
        }


def intersect_monoids(
    sources: Sequence[SpMonoid], box_radius: int = DEFAULT_BOX_RADIUS
) -> BpfMonoid:
    if not sources:
        raise PreconditionError("Nothing to intersect.")
    cone: Optional[Cone2D] = sources[0].monoid.cone
    for source in sources[1:]:
        assert cone is not None
        cone = cone.intersect(source.monoid.cone)
        if cone is None:
            raise VerificationError("The corner monoids meet only in the origin.")
    assert cone is not None
    monoid = Monoid2D(tuple(cone.hilbert_basis()))
    distinct = {source.monoid.generators: source.monoid for source in sources}
    missing = []
    for alpha in range(-box_radius, box_radius + 1):
        for beta in range(-box_radius, box_radius + 1):
            point = (alpha, beta)
            if not cone.contains(point):
                continue
            inside = monoid.contains(point) and all(
                source.contains(point) for source in distinct.values()
            )
            if not inside:
                missing.append(point)
    return BpfMonoid(monoid, tuple(sources), tuple(missing), box_radius)


def bpf_monoid(pair: BundlePair, box_radius: int = DEFAULT_BOX_RADIUS) -> BpfMonoid:
    """The basepoint-free monoid as the intersection of all corner monoids."""
    result = intersect_monoids(sp_monoids(pair), box_radius)
    logger.info("Bpf monoid generated by %s", list(result.monoid.generators))
    return result


def split_bpf(pair: BundlePair, box_radius: int = DEFAULT_BOX_RADIUS) -> BpfMonoid:
    """The basepoint-free monoid of the split bundle of the diagram's columns."""
    if not pair.vars:
        raise PreconditionError("The diagram has no columns.")
    sources = [
        SpMonoid(None, column, corner_monoid(d.alpha))
        for column, d in zip(pair.vars, column_degrees(pair))
    ]
    return intersect_monoids(sources, box_radius)


def effective_monoid(pair: BundlePair) -> Monoid2D:
    """The monoid spanned by the classes of all Cox generators."""
    generators = [RAY_CLASS] + [
        (d.alpha, d.beta) for d in column_degrees(pair)
    ]
    return Monoid2D(tuple(dict.fromkeys(generators)))


class Verdict(enum.Enum):
    """
    The outcome of a Fujita certificate.

    * **PASS** - The Bpf monoid is saturated and equals that of the split bundle, so
    every Nef class is basepoint free and every ample class is very ample.

    * **FAIL** - One of the two comparisons failed.
    """

    PASS = enum.auto()
    FAIL = enum.auto()


@dataclass(frozen=True)
class FujitaCertificate:
    a: Tuple[int, ...]
    variant: Variant
    bpf: BpfMonoid
    split: BpfMonoid
    effective: Monoid2D
    tidy: bool

    @property
    def saturated(self) -> bool:
        return self.bpf.saturated

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.saturated and self.tidy else Verdict.FAIL

    def to_json(self) -> Dict[str, object]:
        return {
            "bundle": {
                "a": [str(value) for value in self.a],
                "variant": self.variant,
            },
            "bpf": self.bpf.to_json(),
            "split_bpf": self.split.to_json(),
            "nef_cone": self.bpf.monoid.cone.to_json(),
            "effective_monoid": self.effective.to_json(),
            "pseudo_effective_cone": {
                "rays": self.effective.cone.to_json(),
                "label": "cone of effective monoid",
            },
            "saturated": self.saturated,
            "tidy": self.tidy,
            "verdict": self.verdict.name,
        }


def fujita_certify(
    a: Sequence[int], variant: Variant, box_radius: int = DEFAULT_BOX_RADIUS
) -> FujitaCertificate:
    weights = validate_weights(a)
    if len(weights) - 1 > FUJITA_MAX_N:
        raise PreconditionError(f"Fujita certificates support n <= {FUJITA_MAX_N}.")
    pair = nonnegative_form(build_pair(weights, variant))
    bpf = bpf_monoid(pair, box_radius)
    split = split_bpf(pair, box_radius)
    tidy = bpf.monoid.is_subset_of(split.monoid) and split.monoid.is_subset_of(
        bpf.monoid
    )
    effective = effective_monoid(pair)
    if not bpf.monoid.is_subset_of(effective):
        raise VerificationError("The Bpf monoid is not inside the effective monoid.")
    certificate = FujitaCertificate(weights, variant, bpf, split, effective, tidy)
    if certificate.verdict is Verdict.FAIL:
        logger.warning("Fujita certificate for %s a=%s failed", variant, weights)
    else:
        logger.info("Fujita certificate for %s a=%s passed", variant, weights)
    return certificate
