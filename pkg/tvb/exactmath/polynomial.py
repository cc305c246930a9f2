"""Sparse Laurent polynomials with exact rational coefficients.

A polynomial is a table from exponent tuples (one integer per variable,
negatives allowed) to nonzero `Fraction` coefficients over an ordered list of
variable names. Operands over different variable lists are aligned on the
sorted union of their names.
"""
from __future__ import annotations

from fractions import Fraction
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import sympy as sp
from typing_extensions import Literal

from tvb.exceptions import PreconditionError
from tvb.exactmath.rational import (
    RatLike,
    as_rat,
    from_sympy_rat,
    rat_to_str,
    to_sympy_rat,
)
from tvb.types import Exponent, Rat

PolyOp = Literal["add", "mul"]


class SparsePoly:
    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Exponent, RatLike]] = None,
    ) -> None:
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PreconditionError(f"Repeated variable names in {variables}.")
        cleaned: Dict[Exponent, Rat] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != len(variables):
                raise PreconditionError(
                    f"Exponent {exponent} does not match variables {variables}."
                )
            value = cleaned.get(exponent, Fraction(0)) + as_rat(coefficient)
            if value:
                cleaned[exponent] = value
            else:
                cleaned.pop(exponent, None)
        self.variables: Tuple[str, ...] = variables
        self.terms: Dict[Exponent, Rat] = cleaned

    @classmethod
    def constant(cls, value: RatLike, variables: Sequence[str] = ()) -> "SparsePoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "SparsePoly":
        return cls((name,), {(power,): 1})

    @classmethod
    def monomial(
        cls, powers: Mapping[str, int], coefficient: RatLike = 1
    ) -> "SparsePoly":
        names = tuple(sorted(powers))
        return cls(names, {tuple(powers[name] for name in names): coefficient})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Rat]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def support(self) -> Tuple[str, ...]:
        """Names of the variables that occur with a nonzero exponent."""
        return tuple(
            name
            for k, name in enumerate(self.variables)
            if any(exponent[k] for exponent in self.terms)
        )

    def align(self, variables: Sequence[str]) -> "SparsePoly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = [
            name
            for name in self.support()
            if name not in variables
        ]
        if missing:
            raise PreconditionError(f"Cannot drop variables {missing}.")
        index = {name: k for k, name in enumerate(self.variables)}
        terms = {}
        for exponent, coefficient in self.terms.items():
            terms[
                tuple(
                    exponent[index[name]] if name in index else 0
                    for name in variables
                )
            ] = coefficient
        return SparsePoly(variables, terms)

    def _aligned(self, other: "SparsePoly") -> Tuple["SparsePoly", "SparsePoly"]:
        if self.variables == other.variables:
            return self, other
        names = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.align(names), other.align(names)

    def __add__(self, other: object) -> "SparsePoly":
        other = _coerce(other, self.variables)
        left, right = self._aligned(other)
        terms = dict(left.terms)
        for exponent, coefficient in right.terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coefficient
        return SparsePoly(left.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(
            self.variables, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other: object) -> "SparsePoly":
        return self + (-_coerce(other, self.variables))

    def __rsub__(self, other: object) -> "SparsePoly":
        return _coerce(other, self.variables) - self

    def __mul__(self, other: object) -> "SparsePoly":
        other = _coerce(other, self.variables)
        left, right = self._aligned(other)
        terms: Dict[Exponent, Rat] = {}
        for e1, c1 in left.terms.items():
            for e2, c2 in right.terms.items():
                exponent = tuple(x + y for x, y in zip(e1, e2))
                terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
        return SparsePoly(left.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "SparsePoly":
        if power < 0:
            if len(self.terms) != 1:
                raise PreconditionError("Only monomials have negative powers.")
            ((exponent, coefficient),) = self.terms.items()
            return SparsePoly(
                self.variables,
                {tuple(power * e for e in exponent): coefficient ** power},
            )
        result = SparsePoly.constant(1, self.variables)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.variables)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        left, right = self._aligned(other)
        return left.terms == right.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> Tuple[Tuple[Tuple[str, int], ...], ...]:
        """A hashable form independent of the variable list and its order."""
        return tuple(
            sorted(
                (
                    tuple(
                        sorted(
                            (name, e)
                            for name, e in zip(self.variables, exponent)
                            if e
                        )
                    ),
                    coefficient,
                )
                for exponent, coefficient in self.terms.items()
            )
        )  # type: ignore[return-value]

    def key_up_to_sign(self) -> tuple:
        return min(self.key(), (-self).key())

    def substitute(self, images: Mapping[str, "SparsePoly"]) -> "SparsePoly":
        """Ring morphism sending each named variable to its image."""
        result = SparsePoly.constant(0)
        for exponent, coefficient in self.terms.items():
            term = SparsePoly.constant(coefficient)
            for name, e in zip(self.variables, exponent):
                if not e:
                    continue
                if name in images:
                    term = term * images[name] ** e
                else:
                    term = term * SparsePoly.var(name, e)
            result = result + term
        return result

    def to_sympy(self) -> sp.Expr:
        symbols = [sp.Symbol(name) for name in self.variables]
        return sp.Add(
            *(
                to_sympy_rat(coefficient)
                * sp.Mul(*(s ** e for s, e in zip(symbols, exponent)))
                for exponent, coefficient in self.terms.items()
            )
        )

    @classmethod
    def from_sympy(cls, expr: sp.Expr, variables: Sequence[str]) -> "SparsePoly":
        """Read an expanded Laurent polynomial in the named symbols."""
        symbols = {sp.Symbol(name): k for k, name in enumerate(variables)}
        terms: Dict[Exponent, Rat] = {}
        for term in sp.Add.make_args(sp.expand(expr)):
            coefficient, rest = term.as_coeff_Mul()
            exponent = [0] * len(symbols)
            for base, power in rest.as_powers_dict().items():
                if base.is_number:
                    continue
                if base not in symbols or not sp.sympify(power).is_Integer:
                    raise PreconditionError(f"{term} is not a Laurent monomial.")
                exponent[symbols[base]] += int(power)
            key = tuple(exponent)
            terms[key] = terms.get(key, Fraction(0)) + from_sympy_rat(coefficient)
        return cls(variables, terms)

    def monomials(self) -> Iterator[Tuple[Dict[str, int], Rat]]:
        for exponent, coefficient in self:
            yield (
                {n: e for n, e in zip(self.variables, exponent) if e},
                coefficient,
            )

    def weights_of_terms(
        self, weight: Callable[[str], Rat]
    ) -> Dict[Exponent, Rat]:
        """The weight of every term under a per-variable weighting."""
        per_variable = [weight(name) for name in self.variables]
        return {
            exponent: sum(
                (e * w for e, w in zip(exponent, per_variable)), Fraction(0)
            )
            for exponent in self.terms
        }

    def is_linear_form(self) -> bool:
        return all(
            sum(exponent) == 1 and min(exponent) >= 0 for exponent in self.terms
        )

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for powers, coefficient in self.monomials():
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in powers.items()
            ]
            magnitude = abs(coefficient)
            if not factors:
                body = rat_to_str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([rat_to_str(magnitude)] + factors)
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value: object, variables: Sequence[str]) -> SparsePoly:
    if isinstance(value, SparsePoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return SparsePoly.constant(value, variables)
    raise TypeError(f"Cannot combine a polynomial with {type(value).__name__}.")


def poly_arith(p: SparsePoly, q: SparsePoly, op: PolyOp) -> SparsePoly:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise PreconditionError(f"Unknown polynomial operation {op!r}.")


def poly_sum(polys: Iterable[SparsePoly]) -> SparsePoly:
    total = SparsePoly.constant(0)
    for p in polys:
        total = total + p
    return total


def poly_determinant(matrix: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """The determinant of a square matrix of polynomials."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise PreconditionError("The determinant needs a square matrix.")
    if not size:
        return SparsePoly.constant(1)
    names = sorted(
        {name for row in matrix for entry in row for name in entry.variables}
    )
    grid = sp.Matrix(size, size, lambda i, j: matrix[i][j].to_sympy())
    return SparsePoly.from_sympy(grid.det(method="berkowitz"), names)
