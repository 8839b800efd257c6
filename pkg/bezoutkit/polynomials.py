"""Provide the ring ℚ[x] of polynomials with rational coefficients."""
from fractions import Fraction
from typing import Final, Iterable, Optional, Sequence, Tuple

from icontract import ensure, invariant, require

from bezoutkit import grammar
from bezoutkit.common import NotAUnit, NotDivisible, PrecisionFlagInvalid
from bezoutkit.kernel import GcdCert, Ring, Term


@invariant(lambda self: len(self.coefficients) == 0 or self.coefficients[-1] != 0)
class Poly:
    """Represent an immutable polynomial by its coefficients, constant term first."""

    #: Coefficients without trailing zeros; the empty tuple is the zero polynomial
    coefficients: Final[Tuple[Fraction, ...]]

    def __init__(self, coefficients: Iterable[Fraction]) -> None:
        """Initialize with the given values, stripping the trailing zeros."""
        stripped = list(coefficients)
        while len(stripped) > 0 and stripped[-1] == 0:
            stripped.pop()
        self.coefficients = tuple(Fraction(value) for value in stripped)

    @staticmethod
    def constant(value: Fraction) -> "Poly":
        """Build the constant polynomial."""
        return Poly([value])

    @staticmethod
    def monomial(value: Fraction, degree: int) -> "Poly":
        """Build ``value * x^degree``."""
        return Poly([Fraction(0)] * degree + [value])

    def is_zero(self) -> bool:
        """Check whether this is the zero polynomial."""
        return len(self.coefficients) == 0

    @property
    def degree(self) -> int:
        """Return the degree; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        """Return the leading coefficient, zero for the zero polynomial."""
        return self.coefficients[-1] if len(self.coefficients) > 0 else Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        length = max(len(self.coefficients), len(other.coefficients))
        return Poly(
            (self.coefficients[i] if i < len(self.coefficients) else 0)
            + (other.coefficients[i] if i < len(other.coefficients) else 0)
            for i in range(length)
        )

    def __neg__(self) -> "Poly":
        return Poly(-value for value in self.coefficients)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly([])

        result = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if left == 0:
                continue
            for j, right in enumerate(other.coefficients):
                result[i + j] += left * right
        return Poly(result)

    def scale(self, factor: Fraction) -> "Poly":
        """Multiply every coefficient by ``factor``."""
        return Poly(value * factor for value in self.coefficients)

    @require(lambda divisor: not divisor.is_zero())
    @ensure(lambda self, divisor, result: result[1].degree < divisor.degree)
    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        """Divide with remainder by long division."""
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(0, len(remainder) - divisor.degree)

        lead = divisor.leading
        for shift in range(len(remainder) - 1 - divisor.degree, -1, -1):
            factor = remainder[shift + divisor.degree] / lead
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, value in enumerate(divisor.coefficients):
                remainder[shift + i] -= factor * value

        return Poly(quotient), Poly(remainder)

    def monic(self) -> "Poly":
        """Scale to the leading coefficient 1; the zero polynomial stays zero."""
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Poly({grammar.render_polynomial(self.coefficients)!r})"


class PolynomialRing(Ring[Poly]):
    """Represent ℚ[x] with monic polynomials as the canonical associates."""

    name = "Qx"

    def zero(self) -> Poly:
        return Poly([])

    def one(self) -> Poly:
        return Poly.constant(Fraction(1))

    def from_int(self, value: int) -> Poly:
        return Poly.constant(Fraction(value))

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def negate(self, a: Poly) -> Poly:
        return -a

    def multiply(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero()

    def is_unit(self, a: Poly) -> bool:
        return a.degree == 0

    def unit_inverse(self, a: Poly) -> Poly:
        if a.degree != 0:
            raise NotAUnit(f"The polynomial {self.render(a)} is not a unit")
        return Poly.constant(1 / a.leading)

    def canonical(self, a: Poly) -> Poly:
        return a.monic()

    def gcd_ext(self, a: Poly, b: Poly) -> GcdCert[Poly]:
        old_r, r = a, b
        old_s, s = self.one(), self.zero()
        old_t, t = self.zero(), self.one()

        while not r.is_zero():
            quotient, remainder = old_r.divmod(r)
            old_r, r = r, remainder
            old_s, s = s, old_s - quotient * s
            old_t, t = t, old_t - quotient * t

        if old_r.is_zero():
            zero = self.zero()
            return GcdCert(zero, zero, zero, zero, zero)

        inverse_lead = 1 / old_r.leading
        g = old_r.scale(inverse_lead)
        return GcdCert(
            g,
            old_s.scale(inverse_lead),
            old_t.scale(inverse_lead),
            a.divmod(g)[0],
            b.divmod(g)[0],
        )

    def div_exact(self, a: Poly, b: Poly) -> Poly:
        quotient, remainder = a.divmod(b)
        if not remainder.is_zero():
            raise NotDivisible(f"{self.render(b)} does not divide {self.render(a)}")
        return quotient

    def divides(self, a: Poly, b: Poly) -> bool:
        return b.divmod(a)[1].is_zero()

    def descent_measure(self, a: Poly) -> Tuple[int, ...]:
        return (a.degree,)

    def linear_form(self, terms: Sequence[Term[Poly]]) -> Poly:
        total = self.zero()
        for coefficient, factors in terms:
            product = self.from_int(coefficient)
            for factor in factors:
                product = product * factor
            total = total + product
        return total

    def vanishes(self, terms: Sequence[Term[Poly]]) -> bool:
        return self.linear_form(terms).is_zero()

    def render(self, a: Poly) -> str:
        return grammar.render_polynomial(a.coefficients)

    def parse(self, text: str) -> Poly:
        parsed = grammar.parse_polynomial(text)
        if parsed.precision is not None:
            raise PrecisionFlagInvalid(
                f"Polynomials carry no precision, but got {text!r}"
            )
        return Poly(parsed.dense())


def linear_power_root(a: Poly) -> Optional[Fraction]:
    """
    Return ``r`` if ``a`` is associate to ``(x - r)^n`` with n ≥ 1, else None.

    >>> linear_power_root(Poly([Fraction(1), Fraction(-2), Fraction(1)]))
    Fraction(1, 1)
    """
    if a.degree < 1:
        return None

    monic = a.monic()
    n = monic.degree
    root = -monic.coefficients[n - 1] / n

    power = Poly.constant(Fraction(1))
    linear = Poly([-root, Fraction(1)])
    for _ in range(n):
        power = power * linear

    return root if power == monic else None
