"""Provide random elements for the property tests."""
import random
from fractions import Fraction
from typing import Any, List

from bezoutkit import kernel
from bezoutkit.henriksen import HenriksenRing, HSeries
from bezoutkit.integers import IntegerRing
from bezoutkit.kernel import Ring
from bezoutkit.polynomials import Poly, PolynomialRing


def random_rational(rng: random.Random, bound: int = 50) -> Fraction:
    """Draw a rational with the numerator and the denominator bounded by ``bound``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_nonzero_rational(rng: random.Random, bound: int = 50) -> Fraction:
    """Draw a nonzero rational with bounded numerator and denominator."""
    while True:
        value = random_rational(rng, bound)
        if value != 0:
            return value


def random_integer(rng: random.Random, bound: int = 1000) -> int:
    """Draw a nonzero integer."""
    while True:
        value = rng.randint(-bound, bound)
        if value != 0:
            return value


def random_poly(rng: random.Random, max_degree: int = 4, bound: int = 9) -> Poly:
    """Draw a nonzero polynomial with small rational coefficients."""
    while True:
        degree = rng.randint(0, max_degree)
        result = Poly(random_rational(rng, bound) for _ in range(degree + 1))
        if not result.is_zero():
            return result


def random_series(
    rng: random.Random, max_order: int = 6, length: int = 6, bound: int = 50
) -> HSeries:
    """
    Draw a nonzero exact element of H of order at most ``max_order``.

    Elements of positive order lie in the radical; those of order zero have a
    nonzero integer constant term.
    """
    order = rng.randint(0, max_order)
    coefficients = []  # type: List[Fraction]
    for degree in range(1, order + length + 1):
        if degree < order:
            coefficients.append(Fraction(0))
        elif degree == order:
            coefficients.append(random_nonzero_rational(rng, bound))
        else:
            coefficients.append(
                random_rational(rng, bound) if rng.random() < 0.5 else Fraction(0)
            )

    if order == 0:
        return HSeries(random_integer(rng, bound), coefficients)

    return HSeries(0, coefficients)


def random_unimodular_triple(ring: HenriksenRing, rng: random.Random) -> List[HSeries]:
    """Draw elements of H of small order until they generate the unit ideal."""
    while True:
        triple = [random_series(rng, max_order=2, bound=30) for _ in range(3)]
        if kernel.is_unimodular(ring, triple):
            return triple


def random_unit(ring: Ring[Any], rng: random.Random) -> Any:
    """Draw a unit: ±1 over ℤ, a nonzero constant over ℚ[x], ±1 + x·(…) over H."""
    if isinstance(ring, IntegerRing):
        return rng.choice([-1, 1])

    if isinstance(ring, PolynomialRing):
        return Poly([random_nonzero_rational(rng)])

    if isinstance(ring, HenriksenRing):
        coefficients = [random_rational(rng) for _ in range(rng.randint(0, 4))]
        return HSeries(rng.choice([-1, 1]), coefficients)

    raise AssertionError(f"Unexpected ring: {ring}")
