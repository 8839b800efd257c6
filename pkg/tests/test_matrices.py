# pylint: disable=missing-docstring

import random
import unittest
from fractions import Fraction
from typing import Any, List

from bezoutkit import kernel, matrices
from bezoutkit.common import MatrixTooLarge, NotUnimodular, RingMismatch
from bezoutkit.henriksen import HenriksenRing, HSeries
from bezoutkit.integers import IntegerRing
from bezoutkit.kernel import Ring
from bezoutkit.matrices import Matrix
from bezoutkit.polynomials import PolynomialRing

from tests import common


def all_pass(verification: List[Any]) -> bool:
    return all(passed for _, passed in verification)


def random_series_entry(rng: random.Random) -> HSeries:
    if rng.random() < 0.5:
        return HSeries.integer(rng.randint(-50, 50))

    coefficient = Fraction(common.random_integer(rng, 50), rng.randint(1, 50))
    return HSeries.monomial(coefficient, rng.randint(1, 3))


def random_matrix(
    ring: Ring[Any], rng: random.Random, max_size: int, entry: Any
) -> Matrix[Any]:
    rows = rng.randint(1, max_size)
    columns = rng.randint(1, max_size)
    return Matrix(ring, [[entry(rng) for _ in range(columns)] for _ in range(rows)])


class TestSmith(unittest.TestCase):
    def test_random_integer_matrices(self) -> None:
        ring = IntegerRing()
        rng = random.Random(0)
        for _ in range(200):
            matrix = random_matrix(ring, rng, 4, lambda r: r.randint(-20, 20))
            cert = matrices.smith(matrix)
            self.assertTrue(all_pass(matrices.verify_smith(matrix, cert)), matrix)
            self.assertIsNone(cert.verified_precision)

    def test_random_series_matrices(self) -> None:
        ring = HenriksenRing()
        rng = random.Random(0)
        for _ in range(200):
            matrix = random_matrix(ring, rng, 3, random_series_entry)
            cert = matrices.smith(matrix)
            self.assertTrue(all_pass(matrices.verify_smith(matrix, cert)), matrix)

    def test_integer_example(self) -> None:
        ring = IntegerRing()
        matrix = matrices.parse_matrix(ring, "2,4;6,8")
        cert = matrices.smith(matrix)
        self.assertEqual([2, 4], cert.diagonal())
        self.assertEqual([2, 8], matrices.minor_gcd_chain(matrix))

    def test_series_example(self) -> None:
        ring = HenriksenRing()
        matrix = matrices.parse_matrix(ring, "x,0;0,2")
        diagonal = matrices.smith(matrix).diagonal()
        self.assertTrue(kernel.associates(ring, diagonal[0], ring.from_int(2)))
        self.assertTrue(kernel.associates(ring, diagonal[1], ring.parse("x")))

    def test_polynomial_example(self) -> None:
        ring = PolynomialRing()
        matrix = matrices.parse_matrix(ring, "x^2 - 1,0;0,x - 1")
        cert = matrices.smith(matrix)
        self.assertTrue(all_pass(matrices.verify_smith(matrix, cert)))
        diagonal = cert.diagonal()
        self.assertEqual("-1 + x", ring.render(diagonal[0]))
        self.assertTrue(kernel.associates(ring, diagonal[1], ring.parse("x^2 - 1")))

    def test_truncated_entry(self) -> None:
        ring = HenriksenRing()
        matrix = matrices.parse_matrix(ring, "1 + x @5,0;0,2")
        cert = matrices.smith(matrix)
        self.assertTrue(all_pass(matrices.verify_smith(matrix, cert)))
        self.assertEqual(["1", "2"], [ring.render(entry) for entry in cert.diagonal()])
        assert cert.verified_precision is not None
        self.assertLessEqual(cert.verified_precision, 5)

    def test_too_large(self) -> None:
        text = ";".join(",".join("1" for _ in range(6)) for _ in range(6))
        with self.assertRaises(MatrixTooLarge):
            matrices.parse_matrix(IntegerRing(), text)


class TestHermite(unittest.TestCase):
    def test_row(self) -> None:
        matrix = matrices.parse_matrix(IntegerRing(), "4,6")
        transform, triangular = matrices.hermite(matrix)
        self.assertEqual([["2", "0"]], triangular.render())
        self.assertTrue(
            all_pass(matrices.verify_hermite(matrix, transform, triangular))
        )

    def test_random_integer_matrices(self) -> None:
        ring = IntegerRing()
        rng = random.Random(1)
        for _ in range(100):
            matrix = random_matrix(ring, rng, 4, lambda r: r.randint(-9, 9))
            transform, triangular = matrices.hermite(matrix)
            self.assertTrue(
                all_pass(matrices.verify_hermite(matrix, transform, triangular))
            )


class TestKaplansky(unittest.TestCase):
    def test_examples(self) -> None:
        self.assertEqual((1, 0), matrices.kaplansky_solve(IntegerRing(), 2, 3, 5))
        self.assertEqual((1, 0), matrices.kaplansky_solve(IntegerRing(), 1, 4, 6))

        ring = HenriksenRing()
        p, q = matrices.kaplansky_solve(
            ring, ring.parse("x"), ring.from_int(2), ring.from_int(3)
        )
        self.assertEqual(("1", "-1"), (ring.render(p), ring.render(q)))

    def test_random_triples_over_series(self) -> None:
        ring = HenriksenRing()
        rng = random.Random(0)
        for _ in range(100):
            a, b, c = common.random_unimodular_triple(ring, rng)
            p, q = matrices.kaplansky_solve(ring, a, b, c)
            self.assertTrue(all_pass(matrices.verify_kaplansky(ring, a, b, c, p, q)))

    def test_integers(self) -> None:
        ring = IntegerRing()
        p, q = matrices.kaplansky_solve(ring, 6, 10, 15)
        self.assertTrue(all_pass(matrices.verify_kaplansky(ring, 6, 10, 15, p, q)))

    def test_non_unimodular_triple(self) -> None:
        with self.assertRaises(NotUnimodular):
            matrices.kaplansky_solve(IntegerRing(), 2, 4, 6)


class TestOperations(unittest.TestCase):
    def test_diagonal_gcd_lcm(self) -> None:
        ring = IntegerRing()
        p, q, (g, l) = matrices.diagonal_gcd_lcm(ring, 4, 6)
        self.assertEqual((2, 12), (g, l))

        diagonal = Matrix(ring, [[4, 0], [0, 6]])
        self.assertEqual(
            [["2", "0"], ["0", "12"]], matrices.multiply(p, diagonal, q).render()
        )
        self.assertEqual(1, matrices.determinant(p))
        self.assertEqual(1, matrices.determinant(q))

    def test_determinant(self) -> None:
        ring = IntegerRing()
        self.assertEqual(-2, matrices.determinant(Matrix(ring, [[1, 2], [3, 4]])))

        series = HenriksenRing()
        matrix = matrices.parse_matrix(series, "x,1;1,x")
        self.assertEqual("-1 + x^2", series.render(matrices.determinant(matrix)))

    def test_ring_mismatch(self) -> None:
        left = Matrix(IntegerRing(), [[1]])
        right = Matrix(PolynomialRing(), [[PolynomialRing().one()]])
        with self.assertRaises(RingMismatch):
            matrices.multiply(left, right)

    def test_identity(self) -> None:
        ring = IntegerRing()
        rows = matrices.identity(ring, 2).rows
        self.assertEqual(((1, 0), (0, 1)), rows)


if __name__ == "__main__":
    unittest.main()
