"""Define the Bezout-domain contract and the algorithms generic over all rings."""
import abc
from typing import Final, Generic, List, Sequence, Tuple, TypeVar

import icontract
from icontract import DBC, ensure, require
from typing_extensions import TypeAlias

from bezoutkit.common import DivisionByZero, NoCoprimeBasis, NotDivisible

E = TypeVar("E")

#: A signed product of elements, ``(coefficient, [f1, f2, ...])`` stands for
#: ``coefficient * f1 * f2 * ...``
Term: TypeAlias = Tuple[int, Sequence[E]]


class GcdCert(Generic[E]):
    """Certify the gcd of ``a`` and ``b`` with Bezout coefficients and cofactors."""

    #: Canonical representative of the gcd
    g: Final[E]

    #: Bezout coefficient of ``a``
    u: Final[E]

    #: Bezout coefficient of ``b``
    v: Final[E]

    #: Cofactor with ``a = g * a1``
    a1: Final[E]

    #: Cofactor with ``b = g * b1``
    b1: Final[E]

    def __init__(self, g: E, u: E, v: E, a1: E, b1: E) -> None:
        """Initialize with the given values."""
        self.g = g
        self.u = u
        self.v = v
        self.a1 = a1
        self.b1 = b1


class Ring(DBC, Generic[E]):
    """
    Represent a commutative Bezout domain with exact decision procedures.

    The contract is deliberately minimal: every generic algorithm in this package is
    expressed through these methods only.
    """

    #: Short name of the ring as used on the command line
    name: str

    @abc.abstractmethod
    def zero(self) -> E:
        """Return the additive identity."""
        raise NotImplementedError()

    @abc.abstractmethod
    def one(self) -> E:
        """Return the multiplicative identity."""
        raise NotImplementedError()

    @abc.abstractmethod
    def from_int(self, value: int) -> E:
        """Embed the integer in the ring."""
        raise NotImplementedError()

    @abc.abstractmethod
    def add(self, a: E, b: E) -> E:
        """Return ``a + b``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def negate(self, a: E) -> E:
        """Return ``-a``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def multiply(self, a: E, b: E) -> E:
        """Return ``a * b``."""
        raise NotImplementedError()

    def subtract(self, a: E, b: E) -> E:
        """Return ``a - b``."""
        return self.add(a, self.negate(b))

    @abc.abstractmethod
    def is_zero(self, a: E) -> bool:
        """Check whether ``a`` is the zero element."""
        raise NotImplementedError()

    @abc.abstractmethod
    def is_unit(self, a: E) -> bool:
        """Check whether ``a`` is invertible."""
        raise NotImplementedError()

    @abc.abstractmethod
    def unit_inverse(self, a: E) -> E:
        """Invert the unit, raising :py:class:`NotAUnit` otherwise."""
        raise NotImplementedError()

    @abc.abstractmethod
    def canonical(self, a: E) -> E:
        """Return the canonical representative of the associate class of ``a``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def gcd_ext(self, a: E, b: E) -> GcdCert[E]:
        """Compute the gcd certificate of ``a`` and ``b``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def div_exact(self, a: E, b: E) -> E:
        """Divide ``a`` by the nonzero ``b``, raising :py:class:`NotDivisible`."""
        raise NotImplementedError()

    @abc.abstractmethod
    def divides(self, a: E, b: E) -> bool:
        """Decide whether the nonzero ``a`` divides ``b``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def descent_measure(self, a: E) -> Tuple[int, ...]:
        """
        Measure ``a`` for the termination of divisor loops.

        Dividing a nonzero element by a nonunit decreases the measure
        lexicographically, except where the ring has infinite divisor chains,
        which is exactly where the loops have to stop.
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def linear_form(self, terms: Sequence[Term[E]]) -> E:
        """Evaluate the sum of signed products in one pass."""
        raise NotImplementedError()

    @abc.abstractmethod
    def vanishes(self, terms: Sequence[Term[E]]) -> bool:
        """Check that the sum of signed products is zero (to precision, if any)."""
        raise NotImplementedError()

    @abc.abstractmethod
    def render(self, a: E) -> str:
        """Render ``a`` in the element grammar."""
        raise NotImplementedError()

    @abc.abstractmethod
    def parse(self, text: str) -> E:
        """Parse ``text`` in the element grammar."""
        raise NotImplementedError()

    def equal(self, a: E, b: E) -> bool:
        """Check ``a == b`` on every representable coefficient."""
        return self.vanishes([(1, [a]), (-1, [b])])

    def unit_part(self, a: E) -> E:
        """Return the unit ``w`` with ``a = w * canonical(a)`` for nonzero ``a``."""
        return self.div_exact(a, self.canonical(a))

    def __str__(self) -> str:
        return self.name


def verify_gcd_cert(
    ring: Ring[E], a: E, b: E, cert: GcdCert[E]
) -> List[Tuple[str, bool]]:
    """List the certificate identities together with their verification outcome."""
    result = [
        (
            "u*a + v*b = g",
            ring.vanishes([(1, [cert.u, a]), (1, [cert.v, b]), (-1, [cert.g])]),
        ),
        ("a = g*a1", ring.vanishes([(1, [a]), (-1, [cert.g, cert.a1])])),
        ("b = g*b1", ring.vanishes([(1, [b]), (-1, [cert.g, cert.b1])])),
        ("g is canonical", ring.equal(cert.g, ring.canonical(cert.g))),
    ]  # type: List[Tuple[str, bool]]

    if not ring.is_zero(cert.g):
        result.append(
            (
                "u*a1 + v*b1 = 1",
                ring.vanishes(
                    [
                        (1, [cert.u, cert.a1]),
                        (1, [cert.v, cert.b1]),
                        (-1, [ring.one()]),
                    ]
                ),
            )
        )

    return result


@ensure(
    lambda ring, a, b, result: all(
        passed for _, passed in verify_gcd_cert(ring, a, b, result)
    ),
    enabled=icontract.SLOW,
)
@ensure(
    lambda ring, a, b, result: ring.is_zero(result.g)
    == (ring.is_zero(a) and ring.is_zero(b))
)
def gcd_ext(ring: Ring[E], a: E, b: E) -> GcdCert[E]:
    """Compute the extended gcd certificate of ``a`` and ``b``."""
    return ring.gcd_ext(a, b)


def gcd(ring: Ring[E], a: E, b: E) -> E:
    """Compute the canonical gcd of ``a`` and ``b``."""
    return ring.gcd_ext(a, b).g


def gcd_many(ring: Ring[E], elements: Sequence[E]) -> E:
    """Compute the canonical gcd of all the ``elements``."""
    result = ring.zero()
    for element in elements:
        result = gcd(ring, result, element)
    return result


def div_exact(ring: Ring[E], a: E, b: E) -> E:
    """Divide ``a`` by ``b`` exactly."""
    if ring.is_zero(b):
        raise DivisionByZero(f"Division of {ring.render(a)} by zero in {ring}")

    return ring.div_exact(a, b)


def divides(ring: Ring[E], a: E, b: E) -> bool:
    """Decide whether ``a`` divides ``b``; zero divides only zero."""
    if ring.is_zero(a):
        return ring.is_zero(b)

    return ring.divides(a, b)


def associates(ring: Ring[E], a: E, b: E) -> bool:
    """Decide whether ``a`` and ``b`` generate the same principal ideal."""
    return divides(ring, a, b) and divides(ring, b, a)


def is_comaximal(ring: Ring[E], a: E, b: E) -> bool:
    """Decide whether aR + bR = R."""
    return ring.is_unit(gcd(ring, a, b))


def is_unimodular(ring: Ring[E], elements: Sequence[E]) -> bool:
    """Decide whether the ``elements`` generate the unit ideal."""
    return ring.is_unit(gcd_many(ring, elements))


@ensure(
    lambda ring, a, b, result: divides(ring, a, result) and divides(ring, b, result),
    enabled=icontract.SLOW,
)
def lcm(ring: Ring[E], a: E, b: E) -> E:
    """Compute the canonical least common multiple of ``a`` and ``b``."""
    if ring.is_zero(a) or ring.is_zero(b):
        return ring.zero()

    cert = ring.gcd_ext(a, b)
    return ring.canonical(ring.multiply(cert.a1, b))


def _contains_associate(ring: Ring[E], elements: Sequence[E], candidate: E) -> bool:
    return any(ring.equal(element, candidate) for element in elements)


@require(lambda elements: len(elements) >= 1)
@require(lambda ring, elements: all(not ring.is_zero(element) for element in elements))
@ensure(
    lambda ring, result: all(
        is_comaximal(ring, result[i], result[j])
        for i in range(len(result))
        for j in range(i + 1, len(result))
    ),
    enabled=icontract.SLOW,
)
def coprime_basis(ring: Ring[E], elements: Sequence[E]) -> List[E]:
    """
    Refine the ``elements`` into pairwise comaximal canonical nonunits.

    Every input is a unit times a product of powers of the output (see
    :py:func:`coprime_exponents`). Overlapping pairs are replaced by their gcd and
    cofactors until no overlap remains.
    """
    basis = []  # type: List[E]

    def insert(candidate: E) -> None:
        if ring.is_unit(candidate):
            return
        canonical = ring.canonical(candidate)
        if not _contains_associate(ring, basis, canonical):
            basis.append(canonical)

    for element in elements:
        insert(element)

    while True:
        overlap = next(
            (
                (i, j)
                for i in range(len(basis))
                for j in range(i + 1, len(basis))
                if not is_comaximal(ring, basis[i], basis[j])
            ),
            None,
        )
        if overlap is None:
            break

        i, j = overlap
        first, second = basis[i], basis[j]
        cert = ring.gcd_ext(first, second)

        for original, cofactor in ((first, cert.a1), (second, cert.b1)):
            if not ring.is_unit(cofactor) and ring.descent_measure(
                cofactor
            ) >= ring.descent_measure(original):
                raise NoCoprimeBasis(
                    f"The refinement of {ring.render(first)} and "
                    f"{ring.render(second)} does not terminate in {ring}: "
                    f"{ring.render(original)} keeps the divisor "
                    f"{ring.render(cert.g)} at every depth"
                )

        del basis[j]
        del basis[i]

        insert(cert.g)
        insert(cert.a1)
        insert(cert.b1)

    return basis


@require(lambda ring, element: not ring.is_zero(element))
def coprime_exponents(
    ring: Ring[E], element: E, basis: Sequence[E]
) -> Tuple[E, List[int]]:
    """
    Write ``element`` as ``unit * ∏ basis[i]^exponents[i]`` by repeated division.

    Raise :py:class:`NotDivisible` if the leftover is not a unit.
    """
    remainder = element
    exponents = []  # type: List[int]
    for factor in basis:
        exponent = 0
        while ring.divides(factor, remainder):
            remainder = ring.div_exact(remainder, factor)
            exponent += 1
        exponents.append(exponent)

    if not ring.is_unit(remainder):
        raise NotDivisible(
            f"The element {ring.render(element)} is not a product of the basis "
            f"up to the unit; the leftover is {ring.render(remainder)}"
        )

    return remainder, exponents
