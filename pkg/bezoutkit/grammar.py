"""
Parse and render the text grammar of elements and matrices.

Elements are sums of terms such as ``2 + 1/2*x + 3*x^2 - x^3``, optionally followed by
a precision suffix ``@16`` which marks a series known only through ``x^16``.
Matrices list rows separated by ``;`` and entries separated by ``,``, or are given
as a JSON array of arrays.
"""
import json
import re
from fractions import Fraction
from typing import Dict, Final, List, Optional, Sequence, Tuple

from icontract import ensure, require

from bezoutkit.common import ParseError, ZeroDenominator
from bezoutkit.exact import render_rat

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(\S))?")


class ParsedPolynomial:
    """Capture the coefficients and the precision of a parsed element."""

    #: Nonzero coefficients indexed by their degree
    coefficients: Final[Dict[int, Fraction]]

    #: Degree through which the coefficients are known, if truncated
    precision: Final[Optional[int]]

    def __init__(
        self, coefficients: Dict[int, Fraction], precision: Optional[int]
    ) -> None:
        """Initialize with the given values."""
        self.coefficients = coefficients
        self.precision = precision

    def dense(self) -> List[Fraction]:
        """List the coefficients from degree zero up to the highest nonzero one."""
        if len(self.coefficients) == 0:
            return []

        result = [Fraction(0)] * (max(self.coefficients) + 1)
        for degree, value in self.coefficients.items():
            result[degree] = value
        return result


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []  # type: List[Tuple[str, int]]
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        assert match is not None

        if match.group(1) is not None:
            tokens.append((match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append((match.group(2), match.start(2)))
        else:
            # Trailing whitespace
            pass

        position = match.end()

    return tokens


class _Parser:
    """Parse the element grammar by recursive descent over the tokens."""

    def __init__(self, text: str) -> None:
        """Initialize with the given values."""
        self.text = text
        self.tokens = _tokenize(text)
        self.cursor = 0

    def _peek(self) -> Optional[str]:
        if self.cursor < len(self.tokens):
            return self.tokens[self.cursor][0]
        return None

    def _position(self) -> int:
        if self.cursor < len(self.tokens):
            return self.tokens[self.cursor][1]
        return len(self.text)

    def _take(self) -> str:
        token = self._peek()
        if token is None:
            raise ParseError("Unexpected end of input", self._position())
        self.cursor += 1
        return token

    def _expect_integer(self, what: str) -> int:
        position = self._position()
        token = self._take()
        if not token.isdigit():
            raise ParseError(f"Expected {what}, but got {token!r}", position)
        return int(token)

    def _monomial(self) -> int:
        self._take()  # "x"
        if self._peek() == "^":
            self._take()
            return self._expect_integer("an exponent")
        return 1

    def _term(self) -> Tuple[Fraction, int]:
        token = self._peek()
        if token == "x":
            return Fraction(1), self._monomial()

        if token is None or not token.isdigit():
            raise ParseError(
                f"Expected a term, but got {token!r}"
                if token is not None
                else "Expected a term, but got the end of input",
                self._position(),
            )

        numerator = self._expect_integer("a numerator")
        coefficient = Fraction(numerator)
        if self._peek() == "/":
            self._take()
            denominator = self._expect_integer("a denominator")
            if denominator == 0:
                raise ZeroDenominator(f"The denominator is zero in {self.text!r}")
            coefficient = Fraction(numerator, denominator)

        if self._peek() == "*":
            self._take()
            if self._peek() != "x":
                raise ParseError("Expected the variable x", self._position())
            return coefficient, self._monomial()

        return coefficient, 0

    def parse(self) -> ParsedPolynomial:
        coefficients = dict()  # type: Dict[int, Fraction]

        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._take() == "-" else 1

        while True:
            coefficient, degree = self._term()
            coefficients[degree] = coefficients.get(degree, Fraction(0)) + (
                sign * coefficient
            )

            token = self._peek()
            if token in ("+", "-"):
                self._take()
                sign = -1 if token == "-" else 1
            else:
                break

        precision = None  # type: Optional[int]
        if self._peek() == "@":
            self._take()
            precision = self._expect_integer("a precision")

        if self._peek() is not None:
            raise ParseError(
                f"Unexpected trailing input {self._peek()!r}", self._position()
            )

        return ParsedPolynomial(
            {degree: value for degree, value in coefficients.items() if value != 0},
            precision,
        )


@require(lambda text: len(text.strip()) > 0)
def parse_polynomial(text: str) -> ParsedPolynomial:
    """
    Parse the element grammar into coefficients and an optional precision.

    >>> parsed = parse_polynomial("2 + 1/2*x - x^3 @8")
    >>> sorted(parsed.coefficients.items()), parsed.precision
    ([(0, Fraction(2, 1)), (1, Fraction(1, 2)), (3, Fraction(-1, 1))], 8)
    """
    return _Parser(text).parse()


def render_polynomial(
    coefficients: Sequence[Fraction], precision: Optional[int] = None
) -> str:
    """
    Render the dense ``coefficients`` (degree zero first) in the element grammar.

    >>> render_polynomial([Fraction(2), Fraction(1, 2), Fraction(0), Fraction(-1)])
    '2 + 1/2*x - x^3'
    """
    parts = []  # type: List[str]
    for degree, value in enumerate(coefficients):
        if value == 0:
            continue

        magnitude = abs(value)
        if degree == 0:
            body = render_rat(magnitude)
        else:
            monomial = "x" if degree == 1 else f"x^{degree}"
            body = (
                monomial if magnitude == 1 else f"{render_rat(magnitude)}*{monomial}"
            )

        if len(parts) == 0:
            parts.append(f"-{body}" if value < 0 else body)
        else:
            parts.append(f"- {body}" if value < 0 else f"+ {body}")

    text = " ".join(parts) if len(parts) > 0 else "0"
    if precision is not None:
        text += f" @{precision}"

    return text


@ensure(lambda result: len(result) >= 1 and len(set(map(len, result))) == 1)
def split_matrix(text: str) -> List[List[str]]:
    """
    Split the matrix text into rows of entry strings.

    >>> split_matrix("x,0;2,3")
    [['x', '0'], ['2', '3']]
    >>> split_matrix('[["x", 0], [2, "3"]]')
    [['x', '0'], ['2', '3']]
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            loaded = json.loads(stripped)
        except json.JSONDecodeError as exception:
            raise ParseError(
                f"Invalid JSON matrix: {exception.msg}", exception.pos
            ) from exception

        if (
            not isinstance(loaded, list)
            or len(loaded) == 0
            or not all(isinstance(row, list) and len(row) > 0 for row in loaded)
        ):
            raise ParseError("Expected a non-empty JSON array of non-empty arrays", 0)

        rows = [[str(entry) for entry in row] for row in loaded]
    else:
        rows = []
        for row_text in stripped.split(";"):
            entries = [entry.strip() for entry in row_text.split(",")]
            if any(len(entry) == 0 for entry in entries):
                raise ParseError("Empty matrix entry", text.find(row_text))
            rows.append(entries)

    if len(set(len(row) for row in rows)) != 1:
        raise ParseError("The matrix rows differ in length", 0)

    return rows
