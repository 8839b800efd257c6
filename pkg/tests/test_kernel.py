# pylint: disable=missing-docstring

import random
import unittest
from fractions import Fraction
from typing import Any, Callable, List, Tuple

from bezoutkit import kernel
from bezoutkit.common import DivisionByZero, NoCoprimeBasis, NotDivisible
from bezoutkit.henriksen import HenriksenRing, HSeries
from bezoutkit.integers import IntegerRing
from bezoutkit.kernel import Ring
from bezoutkit.polynomials import Poly, PolynomialRing

from tests import common


def rings_with_samplers() -> List[Tuple[Ring[Any], Callable[[random.Random], Any]]]:
    return [
        (IntegerRing(), lambda rng: rng.randint(-1000, 1000)),
        (PolynomialRing(), common.random_poly),
        (HenriksenRing(precision=32), common.random_series),
    ]


def small_rings_with_samplers() -> List[
    Tuple[Ring[Any], Callable[[random.Random], Any]]
]:
    """Sample small elements to keep the products of three cheap."""
    return [
        (IntegerRing(), lambda rng: common.random_integer(rng, 100)),
        (PolynomialRing(), lambda rng: common.random_poly(rng, max_degree=2)),
        (
            HenriksenRing(precision=32),
            lambda rng: common.random_series(rng, max_order=3, length=3, bound=20),
        ),
    ]


class TestGcdCert(unittest.TestCase):
    def test_identities_on_random_pairs(self) -> None:
        for ring, sample in rings_with_samplers():
            rng = random.Random(0)
            for _ in range(1000):
                a, b = sample(rng), sample(rng)
                cert = kernel.gcd_ext(ring, a, b)
                failed = [
                    identity
                    for identity, passed in kernel.verify_gcd_cert(ring, a, b, cert)
                    if not passed
                ]
                self.assertEqual(
                    [],
                    failed,
                    f"gcd of {ring.render(a)} and {ring.render(b)} in {ring}",
                )

    def test_zero_pair(self) -> None:
        ring = IntegerRing()
        cert = kernel.gcd_ext(ring, 0, 0)
        self.assertEqual(0, cert.g)

    def test_gcd_is_divided_by_every_common_divisor(self) -> None:
        ring = IntegerRing()
        self.assertEqual(6, kernel.gcd(ring, -12, 18))
        self.assertEqual(4, kernel.gcd_many(ring, [8, -12, 20]))
        self.assertEqual(36, kernel.lcm(ring, -12, 18))
        self.assertEqual(0, kernel.lcm(ring, 0, 18))


class TestDivisibility(unittest.TestCase):
    def test_zero_divides_only_zero(self) -> None:
        ring = IntegerRing()
        self.assertTrue(kernel.divides(ring, 0, 0))
        self.assertFalse(kernel.divides(ring, 0, 3))

    def test_associates(self) -> None:
        ring = PolynomialRing()
        self.assertTrue(
            kernel.associates(ring, ring.parse("2*x - 2"), ring.parse("1/3*x - 1/3"))
        )
        self.assertFalse(kernel.associates(ring, ring.parse("x"), ring.parse("x^2")))

    def test_division_by_zero(self) -> None:
        with self.assertRaises(DivisionByZero):
            kernel.div_exact(IntegerRing(), 3, 0)

    def test_not_divisible(self) -> None:
        with self.assertRaises(NotDivisible):
            kernel.div_exact(IntegerRing(), 3, 2)

    def test_comaximal_and_unimodular(self) -> None:
        ring = IntegerRing()
        self.assertTrue(kernel.is_comaximal(ring, 4, 9))
        self.assertFalse(kernel.is_comaximal(ring, 4, 6))
        self.assertTrue(kernel.is_unimodular(ring, [6, 10, 15]))
        self.assertFalse(kernel.is_unimodular(ring, [6, 10, 14]))


class TestDivisibilityProperties(unittest.TestCase):
    def test_reflexive_up_to_units(self) -> None:
        for ring, sample in small_rings_with_samplers():
            rng = random.Random(1)
            for _ in range(200):
                a = sample(rng)
                u = common.random_unit(ring, rng)
                au = ring.multiply(a, u)
                self.assertTrue(kernel.divides(ring, a, a), ring.render(a))
                self.assertTrue(kernel.divides(ring, a, au), ring.render(a))
                self.assertTrue(kernel.divides(ring, au, a), ring.render(a))
                self.assertTrue(kernel.associates(ring, a, au), ring.render(a))

    def test_transitive(self) -> None:
        for ring, sample in small_rings_with_samplers():
            rng = random.Random(2)
            for _ in range(200):
                a, b, c = sample(rng), sample(rng), sample(rng)
                ab = ring.multiply(a, b)
                abc = ring.multiply(ab, c)
                self.assertTrue(kernel.divides(ring, a, ab))
                self.assertTrue(kernel.divides(ring, ab, abc))
                self.assertTrue(kernel.divides(ring, a, abc), ring.render(abc))

            # Random triples rarely form a chain, so both links are checked first.
            for _ in range(200):
                a, b, c = sample(rng), sample(rng), sample(rng)
                if kernel.divides(ring, a, b) and kernel.divides(ring, b, c):
                    self.assertTrue(kernel.divides(ring, a, c))

    def test_agrees_with_gcd(self) -> None:
        for ring, sample in small_rings_with_samplers():
            rng = random.Random(3)
            for _ in range(300):
                a, b = sample(rng), sample(rng)
                if rng.random() < 0.5:
                    b = ring.multiply(a, b)

                g = kernel.gcd_ext(ring, a, b).g
                self.assertEqual(
                    kernel.associates(ring, g, a),
                    kernel.divides(ring, a, b),
                    f"{ring.render(a)} and {ring.render(b)} in {ring}",
                )

                if kernel.divides(ring, a, b):
                    quotient = kernel.div_exact(ring, b, a)
                    self.assertTrue(ring.vanishes([(1, [b]), (-1, [a, quotient])]))
                else:
                    with self.assertRaises(NotDivisible):
                        kernel.div_exact(ring, b, a)


class TestCoprimeBasis(unittest.TestCase):
    def assert_refines(self, ring: Ring[Any], elements: List[Any]) -> List[Any]:
        basis = kernel.coprime_basis(ring, elements)
        for i, first in enumerate(basis):
            self.assertFalse(ring.is_unit(first))
            for second in basis[i + 1 :]:
                self.assertTrue(kernel.is_comaximal(ring, first, second))

        for element in elements:
            unit, exponents = kernel.coprime_exponents(ring, element, basis)
            self.assertTrue(ring.is_unit(unit))
            product = unit
            for factor, exponent in zip(basis, exponents):
                for _ in range(exponent):
                    product = ring.multiply(product, factor)
            self.assertTrue(ring.equal(element, product))

        return basis

    def test_integers(self) -> None:
        basis = self.assert_refines(IntegerRing(), [12, 18, -35])
        self.assertEqual([2, 3, 35], sorted(basis))

    def test_random_integers(self) -> None:
        rng = random.Random(0)
        for _ in range(100):
            self.assert_refines(
                IntegerRing(), [rng.randint(2, 5000) for _ in range(rng.randint(1, 4))]
            )

    def test_polynomials(self) -> None:
        ring = PolynomialRing()
        basis = self.assert_refines(
            ring,
            [ring.parse("x^3 - x^2 - x + 1"), ring.parse("x^2 + x - 2")],
        )
        self.assertEqual(
            sorted(["-1 + x", "1 + x", "2 + x"]),
            sorted(ring.render(factor) for factor in basis),
        )

    def test_series_in_separate_classes(self) -> None:
        ring = HenriksenRing()
        basis = self.assert_refines(ring, [HSeries.integer(12), HSeries.integer(-18)])
        self.assertEqual(["2", "3"], sorted(ring.render(factor) for factor in basis))

    def test_series_without_refinement(self) -> None:
        ring = HenriksenRing()
        with self.assertRaises(NoCoprimeBasis):
            kernel.coprime_basis(
                ring, [HSeries.monomial(Fraction(1), 1), HSeries.integer(2)]
            )

    def test_leftover_is_reported(self) -> None:
        with self.assertRaises(NotDivisible):
            kernel.coprime_exponents(IntegerRing(), 30, [2, 3])


if __name__ == "__main__":
    unittest.main()
