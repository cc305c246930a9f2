from fractions import Fraction

import pytest

from tvb.exceptions import PreconditionError
from tvb.exactmath import SparsePoly, poly_arith, poly_determinant, poly_sum

x = SparsePoly.var("x")
y = SparsePoly.var("y")


def test_arithmetic():
    square = (x + y) ** 2
    assert square == x ** 2 + 2 * x * y + y ** 2
    assert len(square) == 3
    assert (x - x).is_zero()
    assert poly_arith(x, y, "mul") == x * y
    assert poly_sum([x, y, -x]) == y


def test_str():
    assert str(x + y) == "x + y"
    assert str(x - y) == "x - y"
    assert str(Fraction(1, 2) * x ** 2 - 3) == "1/2*x^2 - 3"
    assert str(SparsePoly.constant(0)) == "0"


def test_substitute():
    p = x ** 2 * y - y
    image = p.substitute({"x": SparsePoly.var("t") + 1})
    t = SparsePoly.var("t")
    assert image == t ** 2 * y + 2 * t * y


def test_keys_ignore_variable_order():
    p = SparsePoly(("x0", "Z01"), {(1, 1): 1, (2, 0): -3})
    q = SparsePoly(("Z01", "x0"), {(1, 1): 1, (0, 2): -3})
    assert p == q
    assert p.key() == q.key()
    assert hash(p) == hash(q)
    assert q in {p}
    assert (-p).key_up_to_sign() == q.key_up_to_sign()
    wide = x.align(("a", "x", "z"))
    assert wide == x
    assert wide.key() == x.key()
    assert (-x).key_up_to_sign() == x.key_up_to_sign()
    assert wide.support() == ("x",)


def test_laurent_monomials():
    inverse = x ** -2
    assert inverse * x ** 2 == 1
    with pytest.raises(PreconditionError) as exc:
        (x + y) ** -1

    assert str(exc.value) == "Only monomials have negative powers."


def test_weights_of_terms():
    p = x ** 2 + x * y
    weights = p.weights_of_terms({"x": Fraction(1), "y": Fraction(3)}.__getitem__)
    assert sorted(weights.values()) == [2, 4]


def test_linear_forms():
    assert (x + 2 * y).is_linear_form()
    assert not (x * y).is_linear_form()
    assert not (x + 1).is_linear_form()


def random_poly(rng, names=("x", "y", "z")):
    terms = {
        tuple(rng.randint(-2, 2) for _ in names): Fraction(
            rng.randint(-5, 5), rng.randint(1, 4)
        )
        for _ in range(rng.randint(0, 4))
    }
    variables = list(names)
    rng.shuffle(variables)
    return SparsePoly(names, terms).align(variables)


def test_ring_axioms(rng):
    zero = SparsePoly.constant(0)
    one = SparsePoly.constant(1)
    for _ in range(200):
        p, q, r = random_poly(rng), random_poly(rng), random_poly(rng)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + zero == p
        assert p * one == p
        assert (p - p).is_zero()
        assert hash(p * q) == hash(q * p)


def test_determinant():
    a, b, c, d = (SparsePoly.var(name) for name in "abcd")
    assert poly_determinant([[a, b], [c, d]]) == a * d - b * c
    assert poly_determinant([]) == 1
    one = SparsePoly.constant(1)
    assert poly_determinant([[x ** -1, y], [one, x]]) == 1 - y
    with pytest.raises(PreconditionError) as exc:
        poly_determinant([[a, b]])

    assert str(exc.value) == "The determinant needs a square matrix."
