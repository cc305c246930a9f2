from math import gcd

import pytest

from tvb.bundle import build_pair
from tvb.exceptions import PreconditionError
from tvb.positivity import (
    Cone2D,
    Monoid2D,
    Verdict,
    bpf_monoid,
    corner_monoid,
    cross,
    effective_monoid,
    extended_euclid,
    fujita_certify,
    primitive_point,
    sp_monoids,
    split_bpf,
)


@pytest.mark.parametrize("a,b", [(12, 18), (5, 3), (-4, 6), (7, 0)])
def test_extended_euclid(a, b):
    x, y = extended_euclid(a, b)
    assert a * x + b * y == gcd(a, b)


def test_primitive_point():
    assert primitive_point((6, -4)) == (3, -2)
    with pytest.raises(PreconditionError) as exc:
        primitive_point((0, 0))

    assert str(exc.value) == "The zero vector spans no ray."


def test_unimodular_cone():
    cone = Cone2D((1, 1), (-1, 0))
    assert cone.hilbert_basis() == [(1, 1), (-1, 0)]
    assert cone.contains((0, 3))
    assert not cone.contains((1, -1))


def test_hilbert_basis_is_minimal():
    cone = Cone2D((5, 2), (1, 3))
    basis = cone.hilbert_basis()
    assert basis[0] == (5, 2)
    assert basis[-1] == (1, 3)
    assert all(cross(p, q) == 1 for p, q in zip(basis, basis[1:]))
    points = [
        (x, y)
        for x in range(9)
        for y in range(9)
        if (x, y) != (0, 0) and cone.contains((x, y))
    ]
    irreducible = {
        p
        for p in points
        if not any(
            q != p and cone.contains((p[0] - q[0], p[1] - q[1])) for q in points
        )
    }
    assert irreducible == set(basis)


@pytest.mark.parametrize(
    "start,end,message",
    [
        ((0, 1), (1, 0), "Boundary rays must run counterclockwise."),
        ((1, 0), (-1, 0), "The cone is not strongly convex."),
    ],
)
def test_invalid_cone(start, end, message):
    with pytest.raises(PreconditionError) as exc:
        Cone2D(start, end)

    assert str(exc.value) == message


def test_spanned_by_and_intersect():
    cone = Cone2D.spanned_by([(2, 2), (-1, 0), (0, 1)])
    assert cone == Cone2D((1, 1), (-1, 0))
    wider = Cone2D((3, 1), (-1, 0))
    assert wider.intersect(cone) == cone
    assert Cone2D((1, 0), (1, 0)).intersect(Cone2D((0, 1), (0, 1))) is None


def test_monoid_contains():
    monoid = Monoid2D(((2, 0), (0, 1)))
    assert monoid.contains((4, 3))
    assert not monoid.contains((3, 1))
    assert not monoid.is_saturated()
    assert Monoid2D(((1, 0), (0, 1))).is_saturated()


def test_corner_monoid():
    assert corner_monoid(3).generators == ((-1, 0), (3, 1))
    assert corner_monoid(3).cone.to_json() == [["3", "1"], ["-1", "0"]]


def test_sp_monoids():
    monoids = sp_monoids(build_pair((1, 2, 3), "primal"))
    assert monoids
    assert {monoid.facet for monoid in monoids} <= {0, 1, 2}
    assert all(monoid.to_json()["element"].startswith("y") for monoid in monoids)


def test_bpf_monoid():
    bpf = bpf_monoid(build_pair((1, 2, 3), "primal"), box_radius=6)
    assert bpf.monoid.cone.to_json() == [["1", "1"], ["-1", "0"]]
    assert bpf.saturated
    document = bpf.to_json()
    assert document["box_radius"] == "6"
    assert document["missing"] == []


def test_split_bpf(primal_pair):
    split = split_bpf(primal_pair, box_radius=4)
    assert split.monoid.cone == Cone2D((1, 1), (-1, 0))
    assert len(split.sources) == 4
    assert all(source.facet is None for source in split.sources)


def test_effective_monoid(dual_pair):
    effective = effective_monoid(dual_pair)
    assert effective.generators[0] == (-1, 0)
    assert effective.cone == Cone2D((7, 1), (-1, 0))


@pytest.mark.parametrize(
    "a,variant", [((1, 1, 1, 1), "primal"), ((1, 2, 3, 4), "dual")]
)
def test_fujita_pass(a, variant):
    certificate = fujita_certify(a, variant, box_radius=8)
    assert certificate.verdict is Verdict.PASS
    document = certificate.to_json()
    assert document["verdict"] == "PASS"
    assert document["bundle"]["variant"] == variant
    assert document["pseudo_effective_cone"]["label"] == "cone of effective monoid"


def test_fujita_random_weights(rng):
    for _ in range(20):
        a = tuple(rng.randint(1, 5) for _ in range(rng.randint(3, 5)))
        for variant in ("primal", "dual"):
            certificate = fujita_certify(a, variant, box_radius=50)
            assert certificate.saturated, (a, variant)
            assert certificate.tidy, (a, variant)
            assert certificate.verdict is Verdict.PASS


def test_fujita_scale():
    with pytest.raises(PreconditionError) as exc:
        fujita_certify((1,) * 7, "primal")

    assert str(exc.value) == "Fujita certificates support n <= 5."
