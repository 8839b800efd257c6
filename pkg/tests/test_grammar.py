# pylint: disable=missing-docstring

import unittest
from fractions import Fraction

from bezoutkit import grammar
from bezoutkit.common import ParseError, ZeroDenominator


class TestParsePolynomial(unittest.TestCase):
    def test_terms_are_collected_by_degree(self) -> None:
        parsed = grammar.parse_polynomial("x + 2 - 1/3*x + x^2 - x^2")
        self.assertEqual({0: Fraction(2), 1: Fraction(2, 3)}, parsed.coefficients)
        self.assertIsNone(parsed.precision)
        self.assertEqual([Fraction(2), Fraction(2, 3)], parsed.dense())

    def test_leading_sign_and_precision(self) -> None:
        parsed = grammar.parse_polynomial("-x^3 @5")
        self.assertEqual([0, 0, 0, -1], parsed.dense())
        self.assertEqual(5, parsed.precision)

    def test_zero(self) -> None:
        parsed = grammar.parse_polynomial("0")
        self.assertEqual([], parsed.dense())

    def test_malformed(self) -> None:
        for text, position in [("2 +", 3), ("2 ** x", 3), ("x^y", 2), ("3 4", 2)]:
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as context:
                    grammar.parse_polynomial(text)
                self.assertEqual(position, context.exception.position)

    def test_zero_denominator(self) -> None:
        with self.assertRaises(ZeroDenominator):
            grammar.parse_polynomial("1/0*x")


class TestRenderPolynomial(unittest.TestCase):
    def test_render_parses_back(self) -> None:
        for text in ["0", "1", "-2 + x", "1/2*x - 3/4*x^5", "-x^2 @7"]:
            with self.subTest(text=text):
                parsed = grammar.parse_polynomial(text)
                self.assertEqual(
                    text, grammar.render_polynomial(parsed.dense(), parsed.precision)
                )


class TestSplitMatrix(unittest.TestCase):
    def test_ragged_rows(self) -> None:
        with self.assertRaises(ParseError):
            grammar.split_matrix("1,2;3")

    def test_empty_entry(self) -> None:
        with self.assertRaises(ParseError):
            grammar.split_matrix("1,,2")

    def test_invalid_json(self) -> None:
        with self.assertRaises(ParseError):
            grammar.split_matrix("[[1, 2]")


if __name__ == "__main__":
    unittest.main()
