"""Matroids of linear ideals, their flats and flags, and initial linear ideals.

The matroid of a linear ideal L on variables y_1..y_m is realized by the
coordinate functionals restricted to the common kernel of the forms of L:
a subset is independent iff the corresponding columns of a kernel basis are.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Sequence,
    Tuple,
    Union,
)

from tvb.bundle import BundlePair, LinearIdeal
from tvb.exceptions import (
    DimensionMismatch,
    InvalidFlag,
    NonMonomialBundle,
    PreconditionError,
    ResourceCapExceeded,
)
from tvb.exactmath import QMatrix, nullspace, rank, rref
from tvb.exactmath.rational import RatLike, as_rat
from tvb.types import FlatsMode, Rat, RatVector

logger = logging.getLogger("tvb.matroid")

DEFAULT_FLAT_GROUND_CAP = 16
EXHAUSTIVE_ORDER_ROWS = 4
SHUFFLED_ORDERS = 3

Flat = FrozenSet[str]


@dataclass(frozen=True, eq=False)
class LinMatroid:
    """
    A matroid realized by the columns of a rational matrix.

    * **ground** - The ordered element names.
    * **vectors** - A matrix with one column per ground element.
    """

    ground: Tuple[str, ...]
    vectors: QMatrix
    _ranks: Dict[FrozenSet[int], int] = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.rank_of(self.ground)

    def indices(self, subset: Iterable[Union[str, int]]) -> FrozenSet[int]:
        return frozenset(
            element if isinstance(element, int) else self.ground.index(element)
            for element in subset
        )

    def rank_of(self, subset: Iterable[Union[str, int]]) -> int:
        key = self.indices(subset)
        if key not in self._ranks:
            columns = [self.vectors.column(j) for j in sorted(key)]
            self._ranks[key] = rank(columns) if columns else 0
        return self._ranks[key]

    def names(self, indices: Iterable[int]) -> Flat:
        return frozenset(self.ground[j] for j in indices)

    def loops(self) -> Flat:
        return frozenset(e for e in self.ground if self.rank_of([e]) == 0)

    def closure(self, subset: Iterable[Union[str, int]]) -> Flat:
        base = self.indices(subset)
        level = self.rank_of(base)
        closed = set(base)
        for j in range(len(self.ground)):
            if j not in base and self.rank_of(base | {j}) == level:
                closed.add(j)
        return self.names(closed)

    def is_flat(self, subset: Iterable[str]) -> bool:
        subset = frozenset(subset)
        return self.closure(subset) == subset

    def covers(self, flat: Flat) -> List[Flat]:
        """Flats of rank one more than `flat` that contain it."""
        found: List[Flat] = []
        for element in self.ground:
            if element in flat:
                continue
            cover = self.closure(flat | {element})
            if cover not in found:
                found.append(cover)
        return found

    def sort_key(self, flat: Iterable[str]) -> Tuple[int, ...]:
        return tuple(sorted(self.ground.index(e) for e in flat))

    def ordered(self, flat: Iterable[str]) -> List[str]:
        return [self.ground[j] for j in self.sort_key(flat)]


@dataclass(frozen=True)
class FlagOfFlats:
    """
    A maximal chain of flats F_1 < ... < F_r with rank(F_i) = i and F_r the ground set.
    """

    flats: Tuple[Flat, ...]

    def __len__(self) -> int:
        return len(self.flats)


def matroid_of(ideal: LinearIdeal) -> LinMatroid:
    """The matroid of the quotient of the linear forms by `ideal`."""
    size = len(ideal.variables)
    kernel = nullspace(QMatrix.from_rows(ideal.basis, size))
    vectors = QMatrix.from_rows(kernel, size)
    return LinMatroid(ideal.variables, vectors)


def initial_linear(ideal: LinearIdeal, weights: Sequence[RatLike]) -> LinearIdeal:
    """The ideal of initial forms (terms of minimal weight) of all elements of `ideal`.

    The basis is reduced with pivots searched in order of increasing weight, so the
    pivot of each row carries its minimal weight and the initial forms of the rows
    are independent.
    """
    w = [as_rat(value) for value in weights]
    if len(w) != len(ideal.variables):
        raise DimensionMismatch(
            f"Weight vector of length {len(w)} does not match "
            f"{len(ideal.variables)} variables."
        )
    order = sorted(range(len(w)), key=lambda j: (w[j], j))
    reduced, _ = rref(ideal.basis, order)
    initial = []
    for row in reduced:
        lowest = min(w[j] for j, value in enumerate(row) if value)
        initial.append(
            [
                value if value and w[j] == lowest else Fraction(0)
                for j, value in enumerate(row)
            ]
        )
    return LinearIdeal.from_vectors(ideal.variables, initial)


def iterated_initial(ideal: LinearIdeal, rows: Iterable[Sequence[Rat]]) -> LinearIdeal:
    for row in rows:
        ideal = initial_linear(ideal, row)
    return ideal


def facet_rows(pair: BundlePair, facet: int) -> List[Tuple[Rat, ...]]:
    if not 0 <= facet < pair.ray_count:
        raise PreconditionError(
            f"Facet index {facet} out of range 0..{pair.ray_count - 1}."
        )
    return [pair.D.row(k) for k in range(pair.ray_count) if k != facet]


def _row_orders(
    rows: Sequence[RatVector], seed: int
) -> Iterator[Sequence[RatVector]]:
    if len(rows) <= EXHAUSTIVE_ORDER_ROWS:
        yield from permutations(rows)
        return
    yield rows[::-1]
    shuffler = random.Random(seed)
    for _ in range(SHUFFLED_ORDERS):
        order = list(rows)
        shuffler.shuffle(order)
        yield order


def facet_initial(pair: BundlePair, facet: int) -> LinearIdeal:
    """The initial ideal at the facet cone spanned by every ray except `facet`.

    Computed as iterated initial ideals over the rows of the facet. Every row order
    must agree: all of them up to `EXHAUSTIVE_ORDER_ROWS` rows, otherwise the
    forward and reverse orders and `SHUFFLED_ORDERS` seeded shuffles.
    """
    rows = facet_rows(pair, facet)
    forward = iterated_initial(pair.L, rows)
    orders = _row_orders(rows, facet)
    if any(iterated_initial(pair.L, order) != forward for order in orders):
        logger.warning("Facet %s of the diagram is a non-monomial face", facet)
        raise NonMonomialBundle(f"non-monomial face at facet {facet}")
    return forward


def is_monomial_bundle(pair: BundlePair) -> bool:
    """True iff every facet initial ideal is generated by variables."""
    for facet in range(pair.ray_count):
        try:
            ideal = facet_initial(pair, facet)
        except NonMonomialBundle:
            return False
        if not ideal.is_monomial():
            return False
    return True


def all_flats(matroid: LinMatroid) -> List[Flat]:
    """Every flat, built rank by rank from the closure of the empty set."""
    layer = [matroid.closure(())]
    flats = list(layer)
    while layer:
        following: List[Flat] = []
        for flat in layer:
            for cover in matroid.covers(flat):
                if cover not in following:
                    following.append(cover)
        flats.extend(following)
        layer = following
    return sorted(flats, key=lambda f: (matroid.rank_of(f), matroid.sort_key(f)))


def maximal_flags(matroid: LinMatroid) -> List[FlagOfFlats]:
    flags: List[FlagOfFlats] = []

    def extend(chain: Tuple[Flat, ...]) -> None:
        top = chain[-1] if chain else matroid.closure(())
        if len(top) == len(matroid.ground):
            flags.append(FlagOfFlats(chain))
            return
        for cover in sorted(matroid.covers(top), key=matroid.sort_key):
            extend(chain + (cover,))

    extend(())
    return flags


def hyperplane_complements(matroid: LinMatroid) -> List[Tuple[str, Flat]]:
    """Per non-loop element e, the hyperplane closure(ground - {e}) when it is one."""
    result = []
    loops = matroid.loops()
    top = matroid.rank
    for element in matroid.ground:
        if element in loops:
            continue
        hyperplane = matroid.closure(e for e in matroid.ground if e != element)
        if matroid.rank_of(hyperplane) == top - 1:
            result.append((element, hyperplane))
    return result


def flats_and_flags(
    matroid: LinMatroid, mode: FlatsMode, cap: int = DEFAULT_FLAT_GROUND_CAP
) -> list:
    if len(matroid.ground) > cap:
        raise ResourceCapExceeded(
            f"Flat enumeration is limited to ground sets of at most {cap} elements, "
            f"got {len(matroid.ground)}."
        )
    if mode == "all_flats":
        result: list = all_flats(matroid)
    elif mode == "maximal_flags":
        result = maximal_flags(matroid)
    elif mode == "nonloop_hyperplane_complements":
        result = hyperplane_complements(matroid)
    else:
        raise InvalidFlag(
            f"Unknown mode {mode!r}. Choices are: "
            "all_flats|maximal_flags|nonloop_hyperplane_complements"
        )
    logger.debug("Enumerated %s items in mode %s", len(result), mode)
    return result


def close_flag(matroid: LinMatroid, chain: Sequence[Iterable[str]]) -> FlagOfFlats:
    """Close each member of `chain` and check the result is a maximal flag of flats.

    The ground set is appended when the chain stops one rank short of it.
    """
    flats: List[Flat] = []
    for position, members in enumerate(chain, start=1):
        members = list(members)
        unknown = [e for e in members if e not in matroid.ground]
        if unknown:
            raise InvalidFlag(f"Unknown elements {unknown} in flag.")
        flat = matroid.closure(members)
        if matroid.rank_of(flat) != position:
            raise InvalidFlag(
                f"Flag member {position} has rank {matroid.rank_of(flat)}, "
                f"expected {position}."
            )
        if flats and not flats[-1] < flat:
            raise InvalidFlag(
                f"Flag member {position} does not contain its predecessor."
            )
        flats.append(flat)
    ground = frozenset(matroid.ground)
    if len(flats) == matroid.rank - 1:
        flats.append(ground)
    if len(flats) != matroid.rank or flats[-1] != ground:
        raise InvalidFlag(
            f"A maximal flag needs {matroid.rank} flats ending in the ground set."
        )
    return FlagOfFlats(tuple(flats))
