from itertools import combinations

import pytest

from tvb.coxring import (
    ext_gz_contains,
    ext_gz_degree,
    ext_gz_generators,
    exchange_relations,
    gz_generator,
    gz_join,
    gz_meet,
    incidence_relations,
    psi_image,
    verify_flag_relations,
)
from tvb.coxring.flag import GZPattern
from tvb.exceptions import PreconditionError
from tvb.exactmath import SparsePoly


def test_gz_generator():
    pattern = gz_generator({1}, 3)
    assert pattern.rows == ((1, 0, 0), (1, 0), (1,))
    assert pattern.is_valid()
    assert pattern.is_positive()
    assert gz_generator({3}, 3).rows == ((1, 0, 0), (0, 0), (0,))
    assert gz_generator(set(), 3) == GZPattern.zero(3)


@pytest.mark.parametrize(
    "tau,message",
    [
        ({1, 2, 3}, "Subset [1, 2, 3] must be a proper subset."),
        ({0, 1}, "Subset [0, 1] is not inside [3]."),
    ],
)
def test_gz_generator_rejects(tau, message):
    with pytest.raises(PreconditionError) as exc:
        gz_generator(tau, 3)

    assert str(exc.value) == message


def test_gz_lattice_identity():
    n = 3
    subsets = [
        set(s) for size in range(n) for s in combinations(range(1, n + 1), size)
    ]
    for tau in subsets:
        for eta in subsets:
            join, meet = gz_join(tau, eta, n), gz_meet(tau, eta, n)
            assert gz_generator(tau, n) + gz_generator(eta, n) == gz_generator(
                join, n
            ) + gz_generator(meet, n)
            if tau <= eta or eta <= tau:
                assert join == tau | eta
                assert meet == tau & eta


def test_ext_gz_generators():
    table = ext_gz_generators((1, 2, 3, 4))
    assert len(table) == 4 + 10
    assert table["x2"].charge == (0, 0, -1, 0)
    assert table["P13"].charge == (0, 2, 0, 4)
    assert table["P0"].pattern == gz_generator({1}, 3)
    assert table["P0"].charge == (1, 0, 0, 0)
    assert table["P02"].pattern == gz_generator({1, 2}, 3)
    assert table["P0"].to_json()["charge"] == ["1", "0", "0", "0"]


def test_ext_gz_contains():
    a = (1, 1, 1, 1)
    assert ext_gz_contains(a, ext_gz_degree(a, {"P1": 1, "P2": 1}))
    assert ext_gz_contains(a, ext_gz_degree(a, {"P1": 1, "x0": 1}))
    target = ext_gz_degree(a, {"P1": 1})
    raised = type(target)(target.pattern, (1, 1, 0, 0))
    assert not ext_gz_contains(a, raised)


def test_psi_image():
    assert psi_image((1, 2, 3), "x1") == SparsePoly.var("t1", -1)
    y11, y12 = SparsePoly.var("y11"), SparsePoly.var("y12")
    t0 = SparsePoly.var("t0")
    assert psi_image((1, 2, 3), "P0") == (y11 + y12) * t0
    assert psi_image((1, 2, 3), "P2") == y12 * SparsePoly.var("t2", 3)


@pytest.mark.parametrize("symbol", ["Q1", "P4", "P123", "P21", "x7"])
def test_psi_image_rejects(symbol):
    with pytest.raises(PreconditionError):
        psi_image((1, 1, 1, 1), symbol)


def test_relation_counts():
    assert len(incidence_relations((1, 1, 1))) == 1
    assert len(incidence_relations((1, 1, 1, 1))) == 1 + 3
    assert exchange_relations(2) == []
    assert len(exchange_relations(3)) > 0


@pytest.mark.parametrize("a", [(1, 1, 1), (2, 3, 1), (1, 1, 1, 1), (1, 2, 1, 3)])
def test_flag_relations_vanish(a):
    report = verify_flag_relations(a)
    assert report.passed
    document = report.to_json()
    assert document["status"] == "PASS"
    assert all(entry["residue"] == "0" for entry in document["relations"])
