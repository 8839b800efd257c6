"""
Provide the Henriksen ring H = ℤ + xℚ[[x]] of series with an integer constant term.

Elements are exact polynomials or series truncated after a known degree. Every
decision (units, divisibility, gcd, classification) depends only on the constant
term, the order and the leading coefficient, which truncation never hides; the
truncation only limits how deep a certificate can be verified.
"""
import abc
from fractions import Fraction
from typing import Final, List, Optional, Sequence, Tuple, Union

from icontract import DBC, ensure, invariant, require

from bezoutkit import grammar
from bezoutkit.common import (
    DivisionByZero,
    NotAUnit,
    NotDivisible,
    ParseError,
    PrecisionExhausted,
    assert_never,
)
from bezoutkit.exact import int_gcd_ext, rat_gcd
from bezoutkit.kernel import GcdCert, Ring, Term
from bezoutkit.polynomials import Poly, PolynomialRing

#: Degree through which series are computed when no input bounds the precision
DEFAULT_PRECISION = 16


class CanonicalClass(DBC):
    """Represent an associate class of H by its canonical descriptor."""

    @abc.abstractmethod
    def __str__(self) -> str:
        raise NotImplementedError()

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and str(self) == str(other)

    def __hash__(self) -> int:
        return hash(str(self))


class Zero(CanonicalClass):
    """Mark the class of the zero element."""

    def __str__(self) -> str:
        return self.__class__.__name__


class Unit(CanonicalClass):
    """Mark the class of the units, *i.e.*, the series with constant term ±1."""

    def __str__(self) -> str:
        return self.__class__.__name__


class IntClass(CanonicalClass):
    """Capture the class of the series with constant term ±m, m ≥ 2."""

    #: Absolute value of the constant term
    m: Final[int]

    @require(lambda m: m >= 2)
    def __init__(self, m: int) -> None:
        """Initialize with the given values."""
        self.m = m

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({self.m})"


class JClass(CanonicalClass):
    """Capture the class of c·x^k, the nonzero elements of the Jacobson radical."""

    #: Absolute value of the leading coefficient
    c: Final[Fraction]

    #: Order of vanishing
    k: Final[int]

    @require(lambda c: c > 0)
    @require(lambda k: k >= 1)
    def __init__(self, c: Fraction, k: int) -> None:
        """Initialize with the given values."""
        self.c = c
        self.k = k

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({self.c}, {self.k})"


CanonicalClassUnion = Union[Zero, Unit, IntClass, JClass]


def _order(dense: Sequence[Fraction]) -> Optional[int]:
    return next((i for i, value in enumerate(dense) if value != 0), None)


@invariant(lambda self: self.prec is None or len(self.coeffs) == self.prec)
@invariant(lambda self: self.prec is None or self.ord is not None)
@invariant(lambda self: self.prec is None or self.prec >= self.ord)  # type: ignore
@invariant(
    lambda self: self.prec is not None
    or len(self.coeffs) == 0
    or self.coeffs[-1] != 0
)
class HSeries:
    """
    Represent an element z0 + a1·x + a2·x² + … of H.

    An exact element has ``prec`` None and all the coefficients beyond the stored
    ones are zero. A truncated element knows its coefficients through ``x^prec``.
    """

    #: Constant term
    z0: Final[int]

    #: Coefficients of x, x², … (without trailing zeros if exact)
    coeffs: Final[Tuple[Fraction, ...]]

    #: Degree through which the coefficients are known, or None if exact
    prec: Final[Optional[int]]

    #: Order of vanishing, or None for the zero element
    ord: Final[Optional[int]]

    def __init__(
        self, z0: int, coeffs: Sequence[Fraction], prec: Optional[int] = None
    ) -> None:
        """
        Initialize with the given values.

        Raise :py:class:`PrecisionExhausted` if a truncated element shows no nonzero
        coefficient, since its order can not be determined.
        """
        stored = [Fraction(value) for value in coeffs]
        if prec is None:
            while len(stored) > 0 and stored[-1] == 0:
                stored.pop()
        else:
            if prec < 0:
                raise ValueError(f"Unexpected negative precision: {prec}")
            stored = (stored + [Fraction(0)] * prec)[:prec]

        self.z0 = z0
        self.coeffs = tuple(stored)
        self.prec = prec

        order = 0 if z0 != 0 else _order([Fraction(0)] + stored)
        if order is None and prec is not None:
            raise PrecisionExhausted(
                f"All the coefficients through x^{prec} cancel; "
                f"the order of the element is not determined at this precision"
            )
        self.ord = order

    @staticmethod
    def from_dense(dense: Sequence[Fraction], prec: Optional[int] = None) -> "HSeries":
        """Build from the coefficients listed from the constant term on."""
        if len(dense) == 0:
            return HSeries(0, [], prec)

        constant = Fraction(dense[0])
        if constant.denominator != 1:
            raise ValueError(f"The constant term {constant} is not an integer")

        return HSeries(constant.numerator, dense[1:], prec)

    @staticmethod
    def integer(value: int) -> "HSeries":
        """Build the exact integer constant."""
        return HSeries(value, [])

    @staticmethod
    @require(lambda degree: degree >= 1)
    def monomial(coefficient: Fraction, degree: int) -> "HSeries":
        """Build the exact ``coefficient * x^degree``."""
        return HSeries(0, [Fraction(0)] * (degree - 1) + [coefficient])

    def dense(self) -> List[Fraction]:
        """List the stored coefficients from the constant term on."""
        return [Fraction(self.z0)] + list(self.coeffs)

    def is_exact(self) -> bool:
        """Check whether all the coefficients are known."""
        return self.prec is None

    def is_zero(self) -> bool:
        """Check whether this is the zero element."""
        return self.ord is None

    @property
    def lead(self) -> Fraction:
        """Return the coefficient at the order, zero for the zero element."""
        if self.ord is None:
            return Fraction(0)
        return self.dense()[self.ord]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HSeries):
            return NotImplemented
        return (self.z0, self.coeffs, self.prec) == (other.z0, other.coeffs, other.prec)

    def __hash__(self) -> int:
        return hash((self.z0, self.coeffs, self.prec))

    def __repr__(self) -> str:
        return f"HSeries({grammar.render_polynomial(self.dense(), self.prec)!r})"


def _min_prec(*precs: Optional[int]) -> Optional[int]:
    known = [prec for prec in precs if prec is not None]
    return min(known) if len(known) > 0 else None


def _truncate(dense: Sequence[Fraction], prec: Optional[int]) -> List[Fraction]:
    if prec is None:
        return list(dense)
    return (list(dense) + [Fraction(0)] * (prec + 1))[: prec + 1]


def _add_dense(
    left: Sequence[Fraction], right: Sequence[Fraction], prec: Optional[int]
) -> List[Fraction]:
    length = max(len(left), len(right))
    summed = [
        (left[i] if i < len(left) else Fraction(0))
        + (right[i] if i < len(right) else Fraction(0))
        for i in range(length)
    ]
    return _truncate(summed, prec)


def add(a: HSeries, b: HSeries) -> HSeries:
    """Add; a truncated sum is known through the smaller precision."""
    prec = _min_prec(a.prec, b.prec)
    return HSeries.from_dense(_add_dense(a.dense(), b.dense(), prec), prec)


def negate(a: HSeries) -> HSeries:
    """Negate."""
    return HSeries(-a.z0, [-value for value in a.coeffs], a.prec)


def scale(a: HSeries, factor: int) -> HSeries:
    """Multiply by the integer ``factor``."""
    if factor == 0:
        return HSeries(0, [])
    return HSeries(a.z0 * factor, [value * factor for value in a.coeffs], a.prec)


@ensure(
    lambda a, b, result: result.ord is None
    or (a.ord is not None and b.ord is not None and result.ord == a.ord + b.ord)
)
def multiply(a: HSeries, b: HSeries) -> HSeries:
    """
    Multiply; the order is additive and a truncated product is known through
    min(prec(a) + ord(b), prec(b) + ord(a)).
    """
    if a.ord is None or b.ord is None:
        return HSeries(0, [])

    candidates = []  # type: List[int]
    if a.prec is not None:
        candidates.append(a.prec + b.ord)
    if b.prec is not None:
        candidates.append(b.prec + a.ord)
    prec = min(candidates) if len(candidates) > 0 else None

    left = a.dense()
    right = b.dense()
    length = len(left) + len(right) - 1
    if prec is not None:
        length = min(length, prec + 1)

    product = [Fraction(0)] * length
    for i, x in enumerate(left):
        if x == 0 or i >= length:
            continue
        for j, y in enumerate(right):
            if i + j >= length:
                break
            product[i + j] += x * y

    return HSeries.from_dense(product, prec)


@require(lambda u: u.z0 in (1, -1))
@require(lambda precision: precision >= 1)
def inverse(u: HSeries, precision: int) -> HSeries:
    """
    Invert the unit ``u`` by the power-series recurrence.

    An exact constant stays exact. Otherwise the result is known through the
    precision of ``u``, or through ``precision`` if ``u`` is exact.
    """
    if u.is_exact() and len(u.coeffs) == 0:
        return u

    prec = u.prec if u.prec is not None else precision
    source = _truncate(u.dense(), prec)

    result = [Fraction(u.z0)]
    for n in range(1, prec + 1):
        accumulated = sum(
            (source[i] * result[n - i] for i in range(1, n + 1)), Fraction(0)
        )
        result.append(-u.z0 * accumulated)

    return HSeries.from_dense(result, prec)


def _series_quotient(
    numerator: Sequence[Fraction], denominator: Sequence[Fraction], prec: int
) -> List[Fraction]:
    """Divide in ℚ[[x]] through ``x^prec``; the denominator has a nonzero constant."""
    left = _truncate(numerator, prec)
    right = _truncate(denominator, prec)

    result = []  # type: List[Fraction]
    for n in range(prec + 1):
        accumulated = left[n] - sum(
            (right[i] * result[n - i] for i in range(1, n + 1)), Fraction(0)
        )
        result.append(accumulated / right[0])
    return result


def canonical_class(a: HSeries) -> CanonicalClassUnion:
    """
    Classify ``a`` by its associate class.

    >>> str(canonical_class(HSeries(6, [Fraction(1, 2)])))
    'IntClass(6)'
    >>> str(canonical_class(HSeries.monomial(Fraction(-3, 4), 2)))
    'JClass(3/4, 2)'
    """
    if a.ord is None:
        return Zero()

    if a.z0 in (1, -1):
        return Unit()

    if a.z0 != 0:
        return IntClass(abs(a.z0))

    return JClass(abs(a.lead), a.ord)


def representative(klass: CanonicalClassUnion) -> HSeries:
    """Return the canonical representative of the class."""
    if isinstance(klass, Zero):
        return HSeries.integer(0)
    elif isinstance(klass, Unit):
        return HSeries.integer(1)
    elif isinstance(klass, IntClass):
        return HSeries.integer(klass.m)
    elif isinstance(klass, JClass):
        return HSeries.monomial(klass.c, klass.k)
    else:
        assert_never(klass)


@require(lambda a: not a.is_zero())
def h_divides(a: HSeries, b: HSeries) -> bool:
    """
    Decide whether ``a`` divides ``b`` from the canonical classes alone.

    >>> h_divides(HSeries.integer(2), HSeries.monomial(Fraction(1), 1))
    True
    >>> h_divides(HSeries.monomial(Fraction(1), 1), HSeries.integer(2))
    False
    """
    left = canonical_class(a)
    right = canonical_class(b)

    if isinstance(left, Unit) or isinstance(right, Zero):
        return True

    if isinstance(left, Zero):
        return False

    elif isinstance(left, IntClass):
        if isinstance(right, Unit):
            return False
        elif isinstance(right, IntClass):
            return right.m % left.m == 0
        elif isinstance(right, JClass):
            return True
        else:
            assert_never(right)

    elif isinstance(left, JClass):
        if isinstance(right, (Unit, IntClass)):
            return False
        elif isinstance(right, JClass):
            return left.k < right.k or (
                left.k == right.k and (right.c / left.c).denominator == 1
            )
        else:
            assert_never(right)

    else:
        assert_never(left)


def gcd_class(
    left: CanonicalClassUnion, right: CanonicalClassUnion
) -> CanonicalClassUnion:
    """Compute the class of the gcd from the classes of the arguments."""
    if isinstance(left, Zero):
        return right
    if isinstance(right, Zero):
        return left
    if isinstance(left, Unit) or isinstance(right, Unit):
        return Unit()

    if isinstance(left, IntClass) and isinstance(right, IntClass):
        g, _, _ = int_gcd_ext(left.m, right.m)
        return Unit() if g == 1 else IntClass(g)

    if isinstance(left, IntClass):
        return left

    if isinstance(right, IntClass):
        return right

    assert isinstance(left, JClass) and isinstance(right, JClass)
    if left.k < right.k:
        return left
    if right.k < left.k:
        return right
    return JClass(rat_gcd(left.c, right.c), left.k)


def _polynomial_bezout(a1: HSeries, b1: HSeries) -> Optional[Tuple[HSeries, HSeries]]:
    """
    Find polynomials u, v in H with u·a1 + v·b1 = 1 for the exact cofactors.

    The Bezout pair from ℚ[x] is shifted by a rational multiple of (b1, -a1) so that
    the constant term of u becomes an integer, and then so is the one of v. Return
    None if the cofactors are truncated or share a factor in ℚ[x].
    """
    if not (a1.is_exact() and b1.is_exact()):
        return None

    h, s, _ = int_gcd_ext(a1.z0, b1.z0)
    if h != 1:
        return None

    left, right = Poly(a1.dense()), Poly(b1.dense())
    cert = PolynomialRing().gcd_ext(left, right)
    if cert.g.degree != 0:
        return None

    def constant(polynomial: Poly) -> Fraction:
        return polynomial.coefficients[0] if not polynomial.is_zero() else Fraction(0)

    if b1.z0 != 0:
        shift = (s - constant(cert.u)) / b1.z0
    else:
        # a1 is ±1 here, so v can be made to vanish at zero.
        shift = constant(cert.v) / a1.z0

    u = cert.u + right.scale(shift)
    v = cert.v - left.scale(shift)
    return HSeries.from_dense(u.coefficients), HSeries.from_dense(v.coefficients)


class HenriksenRing(Ring[HSeries]):
    """Represent H = ℤ + xℚ[[x]] with c·x^k and m ≥ 2 as the canonical associates."""

    name = "H"

    #: Degree through which non-terminating series are computed
    precision: Final[int]

    @require(lambda precision: precision >= 1)
    def __init__(self, precision: int = DEFAULT_PRECISION) -> None:
        """Initialize with the given values."""
        self.precision = precision

    def zero(self) -> HSeries:
        return HSeries.integer(0)

    def one(self) -> HSeries:
        return HSeries.integer(1)

    def from_int(self, value: int) -> HSeries:
        return HSeries.integer(value)

    def add(self, a: HSeries, b: HSeries) -> HSeries:
        return add(a, b)

    def negate(self, a: HSeries) -> HSeries:
        return negate(a)

    def multiply(self, a: HSeries, b: HSeries) -> HSeries:
        return multiply(a, b)

    def is_zero(self, a: HSeries) -> bool:
        return a.is_zero()

    def is_unit(self, a: HSeries) -> bool:
        return a.z0 in (1, -1)

    def unit_inverse(self, a: HSeries) -> HSeries:
        if a.z0 not in (1, -1):
            raise NotAUnit(
                f"The series {self.render(a)} is not a unit: "
                f"its constant term is not ±1"
            )
        return inverse(a, self.precision)

    def canonical(self, a: HSeries) -> HSeries:
        return representative(canonical_class(a))

    def gcd_ext(self, a: HSeries, b: HSeries) -> GcdCert[HSeries]:
        if a.is_zero() and b.is_zero():
            zero = self.zero()
            return GcdCert(zero, zero, zero, zero, zero)

        g = representative(gcd_class(canonical_class(a), canonical_class(b)))
        a1 = self.div_exact(a, g)
        b1 = self.div_exact(b, g)

        exact = _polynomial_bezout(a1, b1)
        if exact is not None:
            u, v = exact
            return GcdCert(g, u, v, a1, b1)

        if self.is_unit(a1):
            return GcdCert(g, self.unit_inverse(a1), self.zero(), a1, b1)

        if self.is_unit(b1):
            return GcdCert(g, self.zero(), self.unit_inverse(b1), a1, b1)

        # The cofactors are comaximal, so their constant terms are coprime integers
        # and the integer Bezout combination of the cofactors is a unit.
        h, s, t = int_gcd_ext(a1.z0, b1.z0)
        assert h == 1, (
            f"Expected coprime constant terms of the cofactors, "
            f"but got {a1.z0} and {b1.z0}"
        )
        combination_inverse = self.unit_inverse(add(scale(a1, s), scale(b1, t)))

        return GcdCert(
            g,
            scale(combination_inverse, s),
            scale(combination_inverse, t),
            a1,
            b1,
        )

    def div_exact(self, a: HSeries, b: HSeries) -> HSeries:
        if b.is_zero():
            raise DivisionByZero(f"Division of {self.render(a)} by zero in H")

        if a.is_zero():
            return self.zero()

        if not h_divides(b, a):
            raise NotDivisible(
                f"{self.render(b)} does not divide {self.render(a)} in H"
            )

        assert a.ord is not None and b.ord is not None
        shift = a.ord - b.ord

        numerator = a.dense()[a.ord :]
        denominator = b.dense()[b.ord :]

        if a.is_exact() and b.is_exact():
            quotient, remainder = Poly(numerator).divmod(Poly(denominator))
            if remainder.is_zero():
                return HSeries.from_dense(
                    [Fraction(0)] * shift + list(quotient.coefficients)
                )
            relative_prec = self.precision
        else:
            relative = _min_prec(
                a.prec - a.ord if a.prec is not None else None,
                b.prec - b.ord if b.prec is not None else None,
            )
            assert relative is not None
            relative_prec = relative

        quotient_dense = _series_quotient(numerator, denominator, relative_prec)
        return HSeries.from_dense(
            [Fraction(0)] * shift + quotient_dense, shift + relative_prec
        )

    def divides(self, a: HSeries, b: HSeries) -> bool:
        return h_divides(a, b)

    def descent_measure(self, a: HSeries) -> Tuple[int, ...]:
        klass = canonical_class(a)
        if isinstance(klass, Zero):
            raise ValueError("The zero element has no descent measure")
        elif isinstance(klass, Unit):
            return (0, 1)
        elif isinstance(klass, IntClass):
            return (0, klass.m)
        elif isinstance(klass, JClass):
            return (klass.k, 0)
        else:
            assert_never(klass)

    def _sum_of_terms(
        self, terms: Sequence[Term[HSeries]]
    ) -> Tuple[List[Fraction], Optional[int]]:
        products = []  # type: List[HSeries]
        for coefficient, factors in terms:
            product = HSeries.integer(coefficient)
            for factor in factors:
                product = multiply(product, factor)
            if not product.is_zero():
                products.append(product)

        prec = _min_prec(*(product.prec for product in products))
        total = []  # type: List[Fraction]
        for product in products:
            total = _add_dense(total, product.dense(), prec)
        return _truncate(total, prec), prec

    def linear_form(self, terms: Sequence[Term[HSeries]]) -> HSeries:
        total, prec = self._sum_of_terms(terms)
        return HSeries.from_dense(total, prec)

    def vanishes(self, terms: Sequence[Term[HSeries]]) -> bool:
        total, _ = self._sum_of_terms(terms)
        return all(value == 0 for value in total)

    def render(self, a: HSeries) -> str:
        return grammar.render_polynomial(a.dense(), a.prec)

    def parse(self, text: str) -> HSeries:
        parsed = grammar.parse_polynomial(text)
        dense = parsed.dense()

        if len(dense) > 0 and dense[0].denominator != 1:
            raise ParseError(
                f"The constant term of an element of H must be an integer, "
                f"but got {dense[0]} in {text!r}",
                0,
            )

        if parsed.precision is not None:
            if parsed.precision < 1:
                raise ParseError(
                    f"The precision must be at least 1 in {text!r}", text.find("@")
                )
            if len(dense) - 1 > parsed.precision:
                raise ParseError(
                    f"The term x^{len(dense) - 1} lies beyond the precision "
                    f"{parsed.precision} in {text!r}",
                    text.find("@"),
                )

        return HSeries.from_dense(dense, parsed.precision)

    def residue(self, a: HSeries, element: HSeries) -> int:
        """
        Map ``element`` to ℤ/m through H/aH ≅ ℤ/m for ``a`` of class IntClass(m).

        The map is reduction of the constant term, since aH contains xℚ[[x]].
        """
        klass = canonical_class(a)
        if not isinstance(klass, IntClass):
            raise ValueError(f"Expected an element of class IntClass, but got {klass}")
        return element.z0 % klass.m
