import pytest

from tvb.coxring import cox_ideal
from tvb.exceptions import PreconditionError
from tvb.exactmath import SparsePoly
from tvb.tropic import (
    CheckStatus,
    caterpillar,
    check_tree,
    generic_weights,
    wellpoised_check,
    wellpoised_hypersurface,
)

v = SparsePoly.var


def test_hypersurface_with_coprime_disjoint_terms():
    p = v("x0") * v("Y0") + v("x1", 2) * v("Y1") + v("x2", 3) * v("Y2")
    assert wellpoised_hypersurface(p)


def test_primal_cox_generator_is_wellpoised(rng):
    for _ in range(50):
        a = tuple(rng.randint(1, 9) for _ in range(rng.randint(3, 6)))
        (generator,) = cox_ideal(a, "primal").generators
        assert wellpoised_hypersurface(generator), a


@pytest.mark.parametrize(
    "p",
    [
        v("x", 2) + v("y", 2),
        v("x") * v("y") + v("x") * v("z"),
    ],
)
def test_hypersurface_not_wellpoised(p):
    assert not wellpoised_hypersurface(p)


def test_hypersurface_needs_two_terms():
    with pytest.raises(PreconditionError) as exc:
        wellpoised_hypersurface(v("x"))

    assert str(exc.value) == "A hypersurface check needs at least two terms."


def test_generic_weights():
    tree = generic_weights(caterpillar((0, 1, 2, 3)))
    assert tree.newick() == "(0:0,1:0,(2:0,3:0):2);"
    shifted = generic_weights(caterpillar((0, 1, 2, 3)), attempt=1)
    assert shifted.newick() == "(0:0,1:0,(2:0,3:0):3);"


def test_check_tree():
    check = check_tree(0, caterpillar((0, 1, 2, 3)), (1, 1, 1), 3)
    assert check.status is CheckStatus.PASS
    assert check.reason is None
    assert len(check.binomials) == 1
    document = check.to_json()
    assert document["tree_id"] == "T0"
    assert document["label"] == "verified up to degree 3"
    assert "reason" not in document


@pytest.mark.parametrize("a", [(1, 1, 1), (2, 1, 3)])
def test_wellpoised_n2(a):
    report = wellpoised_check(a, 4)
    assert report.passed
    assert len(report.checks) == 3
    assert report.to_json()["status"] == "PASS"


@pytest.mark.parametrize("a", [(1, 1, 1, 1), (2, 2, 2, 2), (1, 2, 3, 4)])
def test_wellpoised_n3(a):
    report = wellpoised_check(a, 4)
    assert report.passed
    assert [check.to_json()["tree_id"] for check in report.checks] == [
        f"T{i}" for i in range(15)
    ]


@pytest.mark.parametrize(
    "a,degree",
    [((1, 1, 1, 1, 1), 2), ((1, 1, 1), 5), ((1, 1, 1), 0)],
)
def test_check_scale(a, degree):
    with pytest.raises(PreconditionError) as exc:
        wellpoised_check(a, degree)

    assert str(exc.value) == (
        "The well-poised check supports n <= 3 and 1 <= degree <= 4."
    )
