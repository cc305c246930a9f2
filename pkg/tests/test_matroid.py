from itertools import combinations, permutations

import pytest

from tvb.bundle import LinearIdeal, build_pair, custom_pair
from tvb.exceptions import InvalidFlag, NonMonomialBundle, ResourceCapExceeded
from tvb.matroid import (
    all_flats,
    close_flag,
    facet_initial,
    facet_rows,
    flats_and_flags,
    hyperplane_complements,
    initial_linear,
    is_monomial_bundle,
    iterated_initial,
    matroid_of,
    maximal_flags,
)


@pytest.fixture
def uniform():
    return matroid_of(build_pair((1, 1, 1, 1), "primal").L)


@pytest.fixture
def graphic():
    return matroid_of(build_pair((1, 1, 1, 1), "dual").L)


def test_uniform_matroid(uniform):
    assert uniform.rank == 3
    for subset in combinations(uniform.ground, 3):
        assert uniform.rank_of(subset) == 3
    assert uniform.loops() == frozenset()


def test_uniform_flats(uniform):
    flats = all_flats(uniform)
    assert len(flats) == 1 + 4 + 6 + 1
    assert flats[0] == frozenset()
    assert flats[-1] == frozenset(uniform.ground)
    assert len(maximal_flags(uniform)) == 12


def test_graphic_matroid(graphic):
    assert graphic.rank == 3
    assert len(graphic.ground) == 6
    assert graphic.is_flat({"z01"})
    assert graphic.is_flat({"z01", "z23"})
    assert not graphic.is_flat({"z01", "z02"})
    assert graphic.closure({"z01", "z02"}) == frozenset({"z01", "z02", "z12"})


def test_loop():
    ideal = LinearIdeal.from_vectors(("y0", "y1"), [[1, 0]])
    matroid = matroid_of(ideal)
    assert matroid.rank == 1
    assert matroid.loops() == frozenset({"y0"})
    assert hyperplane_complements(matroid) == [("y1", frozenset({"y0"}))]


def test_initial_linear():
    ideal = build_pair((1, 1, 1, 1), "primal").L
    initial = initial_linear(ideal, [1, 0, 0, 0])
    expected = LinearIdeal.from_vectors(ideal.variables, [[0, 1, 1, 1]])
    assert initial == expected
    assert initial_linear(ideal, [0, 0, 0, 0]) == ideal


def test_initial_linear_keeps_dimension():
    ideal = build_pair((1, 2, 3, 4), "dual").L
    initial = initial_linear(ideal, [3, 1, 4, 1, 5, 9])
    assert initial.dimension == ideal.dimension


@pytest.mark.parametrize("a", [(1, 1, 1), (1, 2, 3, 4), (2, 1, 3, 1, 2)])
def test_primal_facet_initial(a):
    pair = build_pair(a, "primal")
    for facet in range(pair.ray_count):
        ideal = facet_initial(pair, facet)
        assert ideal.is_monomial()
        assert ideal.variables_in() == [f"y{facet}"]


@pytest.mark.parametrize("a", [(1, 1, 1), (1, 2, 3, 4), (2, 1, 3, 1, 2)])
def test_dual_facet_initial(a):
    pair = build_pair(a, "dual")
    n = pair.n
    for facet in range(pair.ray_count):
        ideal = facet_initial(pair, facet)
        expected = [
            f"z{j}{k}" for j, k in combinations(range(n + 1), 2) if facet not in (j, k)
        ]
        assert ideal.is_monomial()
        assert ideal.variables_in() == expected


def test_facet_initial_is_order_independent():
    pair = build_pair((1, 2, 3, 4), "dual")
    rows = facet_rows(pair, 0)
    results = {iterated_initial(pair.L, order) for order in permutations(rows)}
    assert len(results) == 1


@pytest.mark.parametrize("variant", ["primal", "dual"])
def test_facet_initial_agrees_with_shuffled_orders(rng, variant):
    for _ in range(5):
        a = tuple(rng.randint(1, 5) for _ in range(rng.randint(3, 6)))
        pair = build_pair(a, variant)
        facet = rng.randrange(pair.ray_count)
        rows = facet_rows(pair, facet)
        rng.shuffle(rows)
        assert iterated_initial(pair.L, rows) == facet_initial(pair, facet)


@pytest.mark.parametrize("variant", ["primal", "dual"])
def test_is_monomial_bundle(variant):
    assert is_monomial_bundle(build_pair((1, 2, 3, 4), variant))


def test_zero_diagram_is_not_monomial():
    pair = custom_pair(["y0", "y1", "y2"], [[1, 1, 1]], [[0, 0, 0]] * 3)
    assert not is_monomial_bundle(pair)


def test_non_monomial_face():
    pair = custom_pair(
        ["y0", "y1", "y2", "y3"],
        [[1, 1, 1, 1]],
        [[0, 0, 1, 1], [1, 1, 0, 0], [0, 0, 0, 0]],
    )
    with pytest.raises(NonMonomialBundle) as exc:
        facet_initial(pair, 2)

    assert str(exc.value) == "non-monomial face at facet 2"


def test_flats_modes(graphic):
    assert len(flats_and_flags(graphic, "all_flats")) == 1 + 6 + 7 + 1
    assert len(flats_and_flags(graphic, "maximal_flags")) == 18
    complements = flats_and_flags(graphic, "nonloop_hyperplane_complements")
    assert complements == []
    with pytest.raises(ResourceCapExceeded):
        flats_and_flags(graphic, "all_flats", cap=5)


def test_close_flag(graphic):
    flag = close_flag(graphic, [["z01"], ["z01", "z12"]])
    assert flag.flats == (
        frozenset({"z01"}),
        frozenset({"z01", "z02", "z12"}),
        frozenset(graphic.ground),
    )


@pytest.mark.parametrize(
    "chain,message",
    [
        ([["z01"], ["z23"]], "Flag member 2 has rank 1, expected 2."),
        (
            [["z01"], ["z23", "z12"]],
            "Flag member 2 does not contain its predecessor.",
        ),
        ([["z01"]], "A maximal flag needs 3 flats ending in the ground set."),
        ([["w01"]], "Unknown elements ['w01'] in flag."),
    ],
)
def test_invalid_flags(graphic, chain, message):
    with pytest.raises(InvalidFlag) as exc:
        close_flag(graphic, chain)

    assert str(exc.value) == message
