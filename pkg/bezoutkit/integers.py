"""Provide the ring of integers."""
from typing import Sequence, Tuple

from bezoutkit import grammar
from bezoutkit.common import NotAUnit, NotDivisible, ParseError, PrecisionFlagInvalid
from bezoutkit.exact import int_gcd_ext
from bezoutkit.kernel import GcdCert, Ring, Term


class IntegerRing(Ring[int]):
    """Represent ℤ with absolute values as the canonical associates."""

    name = "Z"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, value: int) -> int:
        return value

    def add(self, a: int, b: int) -> int:
        return a + b

    def negate(self, a: int) -> int:
        return -a

    def multiply(self, a: int, b: int) -> int:
        return a * b

    def is_zero(self, a: int) -> bool:
        return a == 0

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def unit_inverse(self, a: int) -> int:
        if a not in (1, -1):
            raise NotAUnit(f"The integer {a} is not a unit")
        return a

    def canonical(self, a: int) -> int:
        return abs(a)

    def gcd_ext(self, a: int, b: int) -> GcdCert[int]:
        g, u, v = int_gcd_ext(a, b)
        if g == 0:
            return GcdCert(0, 0, 0, 0, 0)

        return GcdCert(g, u, v, a // g, b // g)

    def div_exact(self, a: int, b: int) -> int:
        quotient, remainder = divmod(a, b)
        if remainder != 0:
            raise NotDivisible(f"{b} does not divide {a}")
        return quotient

    def divides(self, a: int, b: int) -> bool:
        return b % a == 0

    def descent_measure(self, a: int) -> Tuple[int, ...]:
        return (abs(a),)

    def linear_form(self, terms: Sequence[Term[int]]) -> int:
        total = 0
        for coefficient, factors in terms:
            product = coefficient
            for factor in factors:
                product *= factor
            total += product
        return total

    def vanishes(self, terms: Sequence[Term[int]]) -> bool:
        return self.linear_form(terms) == 0

    def render(self, a: int) -> str:
        return str(a)

    def parse(self, text: str) -> int:
        parsed = grammar.parse_polynomial(text)
        if parsed.precision is not None:
            raise PrecisionFlagInvalid(
                f"Integers carry no precision, but got {text!r}"
            )

        dense = parsed.dense()
        if len(dense) > 1:
            raise ParseError(f"Expected an integer, but got {text!r}", 0)

        value = dense[0] if len(dense) == 1 else 0
        if value.denominator != 1:
            raise ParseError(f"Expected an integer, but got {text!r}", 0)

        return int(value)
