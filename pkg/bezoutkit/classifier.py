"""
Classify elements of the Bezout domains and decompose them.

The predicates decide pseudo-irreducibility, neatness, adequacy and (almost) stable
range 1 for the elements of ℤ, ℚ[x] and H. Each positive answer comes with a
decomposition and each negative answer with a witness, and both are re-checked by
ring arithmetic before they are returned.
"""
import enum
import math
from fractions import Fraction
from typing import (
    Callable,
    Final,
    Generic,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
    cast,
)

import icontract
from icontract import ensure, require

from bezoutkit import kernel
from bezoutkit.common import (
    NotAdequate,
    NotNeat,
    NotUnimodular,
    SearchExhausted,
    UnsupportedRing,
    assert_never,
)
from bezoutkit.exact import (
    DEFAULT_FACTOR_BOUND,
    crt_idempotents,
    factorize,
    prime_power_parts,
)
from bezoutkit.henriksen import (
    HenriksenRing,
    HSeries,
    IntClass,
    JClass,
    canonical_class,
)
from bezoutkit.integers import IntegerRing
from bezoutkit.kernel import Ring
from bezoutkit.polynomials import Poly, PolynomialRing, linear_power_root

E = TypeVar("E")

#: Largest absolute value of the constants scanned by the bounded searches
SEARCH_RADIUS = 64

#: Largest modulus whose quotient ring is enumerated for stable range 1
ENUMERATION_BOUND = 256

#: Smallest radius tried before the direct constructions
SMALL_RADIUS = 2


def grid(radius: int) -> Iterator[int]:
    """
    Iterate over the integers by increasing absolute value, positive first.

    >>> list(grid(2))
    [0, 1, -1, 2, -2]
    """
    yield 0
    for value in range(1, radius + 1):
        yield value
        yield -value


def constant_term(ring: Ring[E], element: E) -> int:
    """Return the integer constant term of an element of ℤ or H."""
    if isinstance(ring, IntegerRing):
        return cast(int, element)
    if isinstance(ring, HenriksenRing):
        return cast(HSeries, element).z0
    raise UnsupportedRing(f"Elements of {ring} have no integer constant term")


def _in_radical(ring: Ring[E], element: E) -> bool:
    """Check whether the element is a nonzero element of the Jacobson radical of H."""
    return isinstance(ring, HenriksenRing) and isinstance(
        canonical_class(cast(HSeries, element)), JClass
    )


def _integer_modulus(ring: Ring[E], element: E) -> Optional[int]:
    """Return m if R/aR ≅ ℤ/m, i.e., for nonzero integers and H of class IntClass."""
    if isinstance(ring, IntegerRing):
        value = cast(int, element)
        return abs(value) if value != 0 else None

    if isinstance(ring, HenriksenRing):
        klass = canonical_class(cast(HSeries, element))
        return klass.m if isinstance(klass, IntClass) else None

    return None


def _reduce(ring: Ring[E], modulus: E, element: E) -> E:
    """Pick a small representative of ``element`` modulo ``modulus``."""
    if isinstance(ring, IntegerRing):
        return cast(E, cast(int, element) % abs(cast(int, modulus)))

    if isinstance(ring, HenriksenRing):
        m = _integer_modulus(ring, modulus)
        if m is not None:
            # xℚ[[x]] lies in the ideal, so only the constant term matters.
            return cast(E, HSeries.integer(cast(HSeries, element).z0 % m))
        return element

    if isinstance(ring, PolynomialRing):
        return cast(E, cast(Poly, element).divmod(cast(Poly, modulus))[1])

    return element


def _require_comaximal(ring: Ring[E], a: E, b: E) -> None:
    if not kernel.is_comaximal(ring, a, b):
        raise NotUnimodular(
            f"The elements {ring.render(a)} and {ring.render(b)} are not comaximal "
            f"in {ring}"
        )


class ConnectedCertificate:
    """Explain why R/aR has no nontrivial idempotent."""

    #: Human-readable reason
    explanation: Final[str]

    def __init__(self, explanation: str) -> None:
        """Initialize with the given values."""
        self.explanation = explanation

    def __str__(self) -> str:
        return self.explanation


class Split(Generic[E]):
    """Capture a = b·c with comaximal nonunits and the matching idempotent."""

    b: Final[E]
    c: Final[E]

    #: Idempotent of R/aR with e ≡ 0 mod c and e ≡ 1 mod b
    idempotent: Final[E]

    def __init__(self, b: E, c: E, idempotent: E) -> None:
        """Initialize with the given values."""
        self.b = b
        self.c = c
        self.idempotent = idempotent


class PseudoIrrVerdict(Generic[E]):
    """Decide pseudo-irreducibility together with the evidence."""

    verdict: Final[bool]
    witness: Final[Union[ConnectedCertificate, Split[E]]]

    @require(
        lambda verdict, witness: verdict == isinstance(witness, ConnectedCertificate)
    )
    def __init__(
        self, verdict: bool, witness: Union[ConnectedCertificate, Split[E]]
    ) -> None:
        """Initialize with the given values."""
        self.verdict = verdict
        self.witness = witness


class AlmostSr1Verdict(Generic[E]):
    """Decide whether R/aR has stable range 1, telling how the answer was reached."""

    verdict: Final[bool]

    #: Pair (b, c) comaximal modulo a with no unit among b + c·t modulo a
    witness: Final[Optional[Tuple[E, E]]]

    #: True if the quotient ring was enumerated element by element
    enumerated: Final[bool]

    @require(lambda verdict, witness: not verdict or witness is None)
    def __init__(
        self, verdict: bool, witness: Optional[Tuple[E, E]], enumerated: bool
    ) -> None:
        """Initialize with the given values."""
        self.verdict = verdict
        self.witness = witness
        self.enumerated = enumerated


class ComaxFactorization(Generic[E]):
    """Represent a = unit · ∏ factors with pairwise comaximal pseudo-irreducibles."""

    unit: Final[E]
    factors: Final[Sequence[E]]

    def __init__(self, unit: E, factors: Sequence[E]) -> None:
        """Initialize with the given values."""
        self.unit = unit
        self.factors = factors


class NeatDecomposition(Generic[E]):
    """Represent a = r·s with rR + bR = R, sR + cR = R and rR + sR = R."""

    r: Final[E]
    s: Final[E]

    def __init__(self, r: E, s: E) -> None:
        """Initialize with the given values."""
        self.r = r
        self.s = s


class AdequateDecomposition(Generic[E]):
    """Represent a = r·s with rR + bR = R and no nonunit divisor of s coprime to b."""

    r: Final[E]
    s: Final[E]

    def __init__(self, r: E, s: E) -> None:
        """Initialize with the given values."""
        self.r = r
        self.s = s


class QuotientKind(enum.Enum):
    """Enumerate the shapes of the quotient ring R/aR."""

    TRIVIAL_RING = "TrivialRing"
    LOCAL = "Local"
    SEMILOCAL_SUM = "SemilocalSum"
    CONNECTED_NON_LOCAL = "ConnectedNonLocal"


class QuotientComponent(Generic[E]):
    """Describe one direct summand of R/aR."""

    #: Generator of the ideal whose quotient is the component
    modulus: Final[E]

    #: Human-readable name such as ``Z/4``
    label: Final[str]

    #: True if the ideals of the component are totally ordered
    is_valuation: Final[bool]

    #: Idempotent of R/aR projecting onto the component
    idempotent: Final[E]

    def __init__(
        self, modulus: E, label: str, is_valuation: bool, idempotent: E
    ) -> None:
        """Initialize with the given values."""
        self.modulus = modulus
        self.label = label
        self.is_valuation = is_valuation
        self.idempotent = idempotent


class QuotientDescriptor(Generic[E]):
    """Describe the structure of R/aR."""

    kind: Final[QuotientKind]
    components: Final[Sequence[QuotientComponent[E]]]

    #: Number of the prime ideals minimal over aR
    minimal_prime_count: Final[int]

    #: Comaximal nonunits modulo a, showing a connected quotient is not local
    witness: Final[Optional[Tuple[E, E]]]

    @require(
        lambda kind, components: kind is not QuotientKind.LOCAL or len(components) == 1
    )
    @require(
        lambda kind, witness: (kind is QuotientKind.CONNECTED_NON_LOCAL)
        == (witness is not None)
    )
    def __init__(
        self,
        kind: QuotientKind,
        components: Sequence[QuotientComponent[E]],
        minimal_prime_count: int,
        witness: Optional[Tuple[E, E]] = None,
    ) -> None:
        """Initialize with the given values."""
        self.kind = kind
        self.components = components
        self.minimal_prime_count = minimal_prime_count
        self.witness = witness


class SpecialKind(enum.Enum):
    """Enumerate the kinds of elements searched by :py:func:`find_special_elements`."""

    LOCAL_QUOTIENT = "local-quotient"
    NONUNIT_ADEQUATE = "nonunit-adequate"
    NONUNIT_NEAT = "nonunit-neat"


def verify_split(ring: Ring[E], a: E, split: Split[E]) -> List[Tuple[str, bool]]:
    """List the identities of a comaximal split with their verification outcome."""
    b, c, e = split.b, split.c, split.idempotent
    return [
        ("a = b*c", ring.vanishes([(1, [a]), (-1, [b, c])])),
        ("b*R + c*R = R", kernel.is_comaximal(ring, b, c)),
        ("b is a nonunit", not ring.is_unit(b)),
        ("c is a nonunit", not ring.is_unit(c)),
        (
            "e^2 = e mod a",
            kernel.divides(ring, a, ring.linear_form([(1, [e, e]), (-1, [e])])),
        ),
        ("e != 0 mod a", not kernel.divides(ring, a, e)),
        ("e != 1 mod a", not kernel.divides(ring, a, ring.subtract(e, ring.one()))),
    ]


@require(lambda ring, a, b, c: ring.vanishes([(1, [a]), (-1, [b, c])]))
def idempotent_from_split(ring: Ring[E], a: E, b: E, c: E) -> E:
    """
    Build the idempotent of R/aR from a comaximal split a = b·c.

    With u·b + v·c = 1 the element c·v is congruent to 1 modulo b and to 0 modulo c.
    """
    _require_comaximal(ring, b, c)
    cert = ring.gcd_ext(b, c)
    return _reduce(ring, a, ring.multiply(c, cert.v))


@ensure(
    lambda ring, a, result: ring.vanishes([(1, [a]), (-1, [result[0], result[1]])])
)
def split_from_idempotent(ring: Ring[E], a: E, e: E) -> Tuple[E, E]:
    """
    Split ``a`` into comaximal factors d = gcd(e, a) and a/d given an idempotent e.

    Raise :py:class:`NotUnimodular` if the factors are not comaximal, which happens
    only if ``e`` is not idempotent modulo ``a``.
    """
    d = kernel.gcd(ring, e, a)
    cofactor = ring.div_exact(a, d)
    _require_comaximal(ring, d, cofactor)
    return d, cofactor


@require(lambda ring, a: not ring.is_zero(a) and not ring.is_unit(a))
def idempotent_mod(
    ring: Ring[E], a: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> Optional[E]:
    """
    Find a nontrivial idempotent of R/aR by the Chinese remainder theorem.

    Return None if R/aR is connected.
    """
    if isinstance(ring, PolynomialRing):
        raise UnsupportedRing(
            "Idempotents of the quotients of Qx require polynomial factorization"
        )

    m = _integer_modulus(ring, a)
    if m is None:
        # Nonzero elements of the radical of H have connected quotients.
        return None

    parts = crt_idempotents(m, factor_bound)
    if len(parts) < 2:
        return None

    _, idempotent = parts[0]
    return ring.from_int(idempotent)


@require(lambda ring, a: not ring.is_zero(a) and not ring.is_unit(a))
@ensure(
    lambda ring, a, result: result.verdict
    or all(
        passed
        for _, passed in verify_split(ring, a, cast(Split[E], result.witness))
    ),
    enabled=icontract.SLOW,
)
def is_pseudo_irreducible(
    ring: Ring[E], a: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> PseudoIrrVerdict[E]:
    """
    Decide whether ``a`` admits no factorization into two comaximal nonunits.

    Equivalently, R/aR is connected. A negative verdict carries the split and the
    idempotent built from it.
    """
    if isinstance(ring, PolynomialRing):
        raise UnsupportedRing(
            "Pseudo-irreducibility in Qx requires polynomial factorization"
        )

    m = _integer_modulus(ring, a)
    if m is None:
        return PseudoIrrVerdict(
            True,
            ConnectedCertificate(
                f"{ring.render(a)} lies in the Jacobson radical; "
                f"R/aR has a unique minimal prime and only the idempotents 0 and 1"
            ),
        )

    parts = prime_power_parts(m, factor_bound)
    if len(parts) == 1:
        return PseudoIrrVerdict(
            True,
            ConnectedCertificate(
                f"R/aR is isomorphic to Z/{m}, a local ring since {m} is a prime power"
            ),
        )

    b = ring.from_int(parts[0])
    c = ring.div_exact(a, b)
    return PseudoIrrVerdict(
        False, Split(b, c, idempotent_from_split(ring, a, b, c))
    )


def verify_comax_factorization(
    ring: Ring[E], a: E, factorization: ComaxFactorization[E]
) -> List[Tuple[str, bool]]:
    """List the identities of the factorization with their verification outcome."""
    factors = factorization.factors
    return [
        ("unit is a unit", ring.is_unit(factorization.unit)),
        (
            "a = unit * product of factors",
            ring.vanishes([(1, [a]), (-1, [factorization.unit, *factors])]),
        ),
        (
            "factors are pairwise comaximal",
            all(
                kernel.is_comaximal(ring, factors[i], factors[j])
                for i in range(len(factors))
                for j in range(i + 1, len(factors))
            ),
        ),
        (
            "factors are nonunits",
            all(not ring.is_unit(factor) for factor in factors),
        ),
    ]


@require(lambda ring, a: not ring.is_zero(a) and not ring.is_unit(a))
@ensure(
    lambda ring, a, result: all(
        passed for _, passed in verify_comax_factorization(ring, a, result)
    ),
    enabled=icontract.SLOW,
)
def comax_factor(
    ring: Ring[E], a: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> ComaxFactorization[E]:
    """
    Factor ``a`` completely into pairwise comaximal pseudo-irreducible factors.

    Over ℤ the factors are the prime powers in increasing order of the primes. Over
    H the unit of an element with a nonzero constant term is absorbed into the first
    factor, and the elements of the radical are their own factorization.
    """
    if isinstance(ring, PolynomialRing):
        raise UnsupportedRing(
            "Comaximal factorization in Qx requires polynomial factorization; "
            "use the coprime basis instead"
        )

    m = _integer_modulus(ring, a)
    if m is None:
        return ComaxFactorization(ring.one(), [a])

    parts = [ring.from_int(part) for part in prime_power_parts(m, factor_bound)]

    if isinstance(ring, IntegerRing):
        return ComaxFactorization(ring.from_int(1 if cast(int, a) > 0 else -1), parts)

    parts[0] = ring.multiply(parts[0], ring.unit_part(a))
    return ComaxFactorization(ring.one(), parts)


def _strip_common_part(ring: Ring[E], a: E, b: E) -> Optional[E]:
    """
    Divide out of ``a`` every divisor it shares with ``b``.

    Return None if a division by a nonunit does not decrease the descent measure,
    which means the divisors shared with ``b`` can not be exhausted.
    """
    r = a
    while True:
        d = kernel.gcd(ring, r, b)
        if ring.is_unit(d):
            return r

        quotient = ring.div_exact(r, d)
        if not ring.is_unit(quotient) and ring.descent_measure(
            quotient
        ) >= ring.descent_measure(r):
            return None

        r = quotient


def verify_neat(
    ring: Ring[E], a: E, b: E, c: E, decomposition: NeatDecomposition[E]
) -> List[Tuple[str, bool]]:
    """List the identities of a neat decomposition with their verification outcome."""
    r, s = decomposition.r, decomposition.s
    return [
        ("a = r*s", ring.vanishes([(1, [a]), (-1, [r, s])])),
        ("r*R + b*R = R", kernel.is_comaximal(ring, r, b)),
        ("s*R + c*R = R", kernel.is_comaximal(ring, s, c)),
        ("r*R + s*R = R", kernel.is_comaximal(ring, r, s)),
    ]


@require(lambda ring, a: not ring.is_zero(a))
@ensure(
    lambda ring, a, b, c, result: all(
        passed for _, passed in verify_neat(ring, a, b, c, result)
    ),
    enabled=icontract.SLOW,
)
def neat_decompose(ring: Ring[E], a: E, b: E, c: E) -> NeatDecomposition[E]:
    """
    Decompose a = r·s against the comaximal pair (b, c).

    The divisors ``a`` shares with ``b`` go to ``s`` and the rest stays in ``r``.

    :raise NotNeat: with the witness (b, c) if no decomposition exists
    """
    _require_comaximal(ring, b, c)

    candidate = None  # type: Optional[NeatDecomposition[E]]
    r = _strip_common_part(ring, a, b)
    if r is not None:
        candidate = NeatDecomposition(r, ring.div_exact(a, r))
    elif ring.is_unit(c):
        candidate = NeatDecomposition(ring.one(), a)

    if candidate is None or not all(
        passed for _, passed in verify_neat(ring, a, b, c, candidate)
    ):
        raise NotNeat(
            f"{ring.render(a)} admits no neat decomposition against "
            f"({ring.render(b)}, {ring.render(c)}) in {ring}",
            (b, c),
        )

    return candidate


def _split_shapes(ring: HenriksenRing, order: int) -> Iterator[Tuple[HSeries, HSeries]]:
    """
    Iterate over the shapes of the factorizations r·s of an element of the given order.

    Comaximality of r and s with integers depends only on whether they lie in the
    radical, hence on their orders, so one representative per order split suffices.
    """
    for left in range(order + 1):
        right = order - left
        yield (
            ring.one() if left == 0 else HSeries.monomial(Fraction(1), left),
            ring.one() if right == 0 else HSeries.monomial(Fraction(1), right),
        )


@require(lambda ring, a: not ring.is_zero(a))
def is_neat(ring: Ring[E], a: E) -> Tuple[bool, Optional[Tuple[E, E]]]:
    """
    Decide whether ``a`` is neat.

    Every nonzero element of ℤ and ℚ[x] is neat. In H the neat elements are exactly
    those outside the radical; the radical elements are refuted by the pair (3, 5).
    """
    if not _in_radical(ring, a):
        return True, None

    assert isinstance(ring, HenriksenRing)
    b, c = ring.from_int(3), ring.from_int(5)

    order = cast(HSeries, a).ord
    assert order is not None
    for r, s in _split_shapes(ring, order):
        assert not (
            kernel.is_comaximal(ring, r, b)
            and kernel.is_comaximal(ring, s, c)
            and kernel.is_comaximal(ring, r, s)
        ), f"Unexpected neat split shape {ring.render(r)} * {ring.render(s)}"

    return False, (cast(E, b), cast(E, c))


def verify_adequate(
    ring: Ring[E], a: E, b: E, decomposition: AdequateDecomposition[E]
) -> List[Tuple[str, bool]]:
    """List the identities of an adequate decomposition with their outcome."""
    r, s = decomposition.r, decomposition.s
    remainder = _strip_common_part(ring, s, b)
    return [
        ("a = r*s", ring.vanishes([(1, [a]), (-1, [r, s])])),
        ("r*R + b*R = R", kernel.is_comaximal(ring, r, b)),
        (
            "s has no nonunit divisor comaximal with b",
            remainder is not None and ring.is_unit(remainder),
        ),
    ]


@require(lambda ring, a: not ring.is_zero(a))
@ensure(
    lambda ring, a, b, result: all(
        passed for _, passed in verify_adequate(ring, a, b, result)
    ),
    enabled=icontract.SLOW,
)
def adequate_decompose(ring: Ring[E], a: E, b: E) -> AdequateDecomposition[E]:
    """
    Decompose a = r·s so that r is coprime to ``b`` and s collects what ``a`` shares
    with ``b``.

    :raise NotAdequate: with the witness ``b`` if the divisor loop stagnates
    """
    r = _strip_common_part(ring, a, b)
    if r is None:
        raise NotAdequate(
            f"Dividing {ring.render(a)} by its gcd with {ring.render(b)} does not "
            f"terminate in {ring}: the quotient stays in the same associate class",
            b,
        )

    return AdequateDecomposition(r, ring.div_exact(a, r))


@require(lambda ring, a: not ring.is_zero(a))
def is_adequate(ring: Ring[E], a: E) -> Tuple[bool, Optional[E]]:
    """
    Decide whether ``a`` is adequate; a negative answer carries the refuting ``b``.

    Every nonzero element of ℤ and ℚ[x] is adequate. In H the radical elements are
    refuted by b = 2, since dividing by 2 never leaves the radical.
    """
    if not _in_radical(ring, a):
        return True, None

    b = ring.from_int(2)
    try:
        adequate_decompose(ring, a, b)
    except NotAdequate:
        return False, b

    raise AssertionError(
        f"Expected the radical element {ring.render(a)} to be refuted by 2"
    )


def _integer_sr1(alpha: int, beta: int) -> Optional[int]:
    """Find t with alpha + beta·t = ±1, or None."""
    if beta == 0:
        return 0 if alpha in (1, -1) else None

    for target in (1, -1):
        if (target - alpha) % beta == 0:
            return (target - alpha) // beta

    return None


@ensure(
    lambda ring, a, b, result: result is None
    or ring.is_unit(ring.linear_form([(1, [a]), (1, [b, result])]))
)
def sr1_reduce(ring: Ring[E], a: E, b: E) -> Optional[E]:
    """
    Find t with a + b·t a unit for the comaximal pair (a, b).

    None is a decision, not a failed search: over ℤ and H the unit must have the
    constant term ±1, and over ℚ[x] the remainder of ``a`` modulo ``b`` must be a
    nonzero constant.
    """
    _require_comaximal(ring, a, b)

    if isinstance(ring, (IntegerRing, HenriksenRing)):
        t = _integer_sr1(constant_term(ring, a), constant_term(ring, b))
        return ring.from_int(t) if t is not None else None

    elif isinstance(ring, PolynomialRing):
        left, right = cast(Poly, a), cast(Poly, b)
        if right.is_zero():
            return cast(E, ring.zero()) if ring.is_unit(left) else None

        if ring.is_unit(right):
            return cast(E, ring.div_exact(ring.one() - left, right))

        quotient, remainder = left.divmod(right)
        return cast(E, -quotient) if remainder.degree == 0 else None

    else:
        raise UnsupportedRing(f"Stable range 1 is not decided for {ring}")


def grid_pairs(radius: int) -> Iterator[Tuple[int, int]]:
    """Iterate over the pairs of :py:func:`grid`, the second coordinate outermost."""
    for second in grid(radius):
        for first in grid(radius):
            yield first, second


def primes_not_dividing(modulus: int, other: int, factor_bound: int) -> int:
    """Multiply the primes of ``modulus`` which do not divide ``other``."""
    result = 1
    for prime, _ in factorize(abs(modulus), factor_bound):
        if other % prime != 0:
            result *= prime
    return result


def verify_sr2(
    ring: Ring[E], a: E, b: E, c: E, x: E, y: E
) -> List[Tuple[str, bool]]:
    """List the identities of a stable range 2 reduction with their outcome."""
    left = ring.linear_form([(1, [a]), (1, [c, x])])
    right = ring.linear_form([(1, [b]), (1, [c, y])])
    cert = kernel.gcd_ext(ring, left, right)
    return [
        ("gcd(a + c*x, b + c*y) is a unit", ring.is_unit(cert.g)),
        *kernel.verify_gcd_cert(ring, left, right, cert),
    ]


def _sr2_direct(
    ring: Ring[E], a: E, b: E, c: E, factor_bound: int
) -> Optional[Tuple[E, E]]:
    """Construct (x, y) from the constant terms over ℤ and H."""
    if not isinstance(ring, (IntegerRing, HenriksenRing)):
        return None

    alpha, beta, gamma = (constant_term(ring, element) for element in (a, b, c))
    y = 0 if beta != 0 else 1
    shifted = beta + gamma * y
    if shifted == 0:
        return None

    # For every prime p of the shifted b: either p divides a and then not c, so x
    # must avoid p; or p does not divide a and x takes p.
    x = primes_not_dividing(shifted, alpha, factor_bound)
    return ring.from_int(x), ring.from_int(y)


def sr2_reduce(
    ring: Ring[E], a: E, b: E, c: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> Tuple[E, E]:
    """
    Find (x, y) with (a + c·x)R + (b + c·y)R = R for the unimodular triple.

    A small grid is scanned first for short certificates, then the construction from
    the constant terms is tried, and finally the grid up to :py:data:`SEARCH_RADIUS`.
    """
    if not kernel.is_unimodular(ring, [a, b, c]):
        raise NotUnimodular(
            f"The elements {ring.render(a)}, {ring.render(b)} and {ring.render(c)} "
            f"do not generate the unit ideal of {ring}"
        )

    def works(x: E, y: E) -> bool:
        return kernel.is_comaximal(
            ring,
            ring.linear_form([(1, [a]), (1, [c, x])]),
            ring.linear_form([(1, [b]), (1, [c, y])]),
        )

    for x, y in grid_pairs(SMALL_RADIUS):
        if works(ring.from_int(x), ring.from_int(y)):
            return ring.from_int(x), ring.from_int(y)

    direct = _sr2_direct(ring, a, b, c, factor_bound)
    if direct is not None and works(*direct):
        return direct

    for x, y in grid_pairs(SEARCH_RADIUS):
        if works(ring.from_int(x), ring.from_int(y)):
            return ring.from_int(x), ring.from_int(y)

    raise SearchExhausted(
        f"No (x, y) with |x|, |y| <= {SEARCH_RADIUS} reduces "
        f"({ring.render(a)}, {ring.render(b)}, {ring.render(c)}) in {ring}"
    )


def _neat_candidate(ring: Ring[E], n: E, z: E, t: E) -> Optional[NeatDecomposition[E]]:
    """Split ``n`` coprime to ``t`` into its part coprime to ``z`` and the rest."""
    if ring.is_zero(n) or not kernel.is_comaximal(ring, n, t):
        return None

    r = _strip_common_part(ring, n, z)
    if r is None:
        return None

    return NeatDecomposition(r, ring.div_exact(n, r))


@ensure(
    lambda ring, x, y, z, t, result: all(
        passed
        for _, passed in verify_neat(
            ring,
            ring.linear_form([(1, [x]), (1, [result[0], y])]),
            z,
            t,
            NeatDecomposition(result[1], result[2]),
        )
    ),
    enabled=icontract.SLOW,
)
def neat_range_reduce(ring: Ring[E], x: E, y: E, z: E, t: E) -> Tuple[E, E, E]:
    """
    Find (λ, r, s) with x + λ·y = r·s, rR + zR = R, sR + tR = R and rR + sR = R.

    The first pass looks for an ``x + λ·y`` coprime to ``t`` and splits off its
    common part with ``z``; the second accepts any neat decomposition.
    """
    _require_comaximal(ring, x, y)
    _require_comaximal(ring, z, t)

    for value in grid(SEARCH_RADIUS):
        shift = ring.from_int(value)
        n = ring.linear_form([(1, [x]), (1, [shift, y])])
        candidate = _neat_candidate(ring, n, z, t)
        if candidate is not None and all(
            passed for _, passed in verify_neat(ring, n, z, t, candidate)
        ):
            return shift, candidate.r, candidate.s

    for value in grid(SEARCH_RADIUS):
        shift = ring.from_int(value)
        n = ring.linear_form([(1, [x]), (1, [shift, y])])
        if ring.is_zero(n):
            continue
        try:
            decomposition = neat_decompose(ring, n, z, t)
        except NotNeat:
            continue
        return shift, decomposition.r, decomposition.s

    raise SearchExhausted(
        f"No λ with |λ| <= {SEARCH_RADIUS} makes "
        f"{ring.render(x)} + λ*{ring.render(y)} "
        f"neat against ({ring.render(z)}, {ring.render(t)}) in {ring}"
    )


def neat_range_one_reduce(ring: Ring[E], a: E, b: E) -> E:
    """Find t such that a + b·t is a nonzero neat element for the comaximal (a, b)."""
    _require_comaximal(ring, a, b)

    for value in grid(SEARCH_RADIUS):
        t = ring.from_int(value)
        candidate = ring.linear_form([(1, [a]), (1, [b, t])])
        if not ring.is_zero(candidate) and is_neat(ring, candidate)[0]:
            return t

    raise SearchExhausted(
        f"No t with |t| <= {SEARCH_RADIUS} makes {ring.render(a)} + "
        f"{ring.render(b)}*t neat in {ring}"
    )


def _assert_radical_inside(ring: HenriksenRing, a: HSeries) -> None:
    """Check on samples that aH contains xℚ[[x]], so that H/aH ≅ ℤ/m."""
    for degree in range(1, 4):
        sample = HSeries.monomial(Fraction(1, degree + 1), degree)
        assert ring.divides(a, sample), (
            f"Expected {ring.render(a)} to divide {ring.render(sample)}"
        )
        assert ring.residue(a, sample) == 0


@require(lambda ring, a: not ring.is_zero(a))
def quotient_descriptor(
    ring: Ring[E], a: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> QuotientDescriptor[E]:
    """
    Describe R/aR.

    For a ≠ 0 in ℤ and for the elements of H with a nonzero constant term the
    quotient is ℤ/m, which splits by the Chinese remainder theorem into the
    valuation rings ℤ/p^α. A nonzero radical element of H has a connected quotient
    which is not local.
    """
    if ring.is_unit(a):
        return QuotientDescriptor(QuotientKind.TRIVIAL_RING, [], 0)

    if isinstance(ring, PolynomialRing):
        polynomial = cast(Poly, a)
        if linear_power_root(polynomial) is None:
            raise UnsupportedRing(
                f"The structure of Qx/({ring.render(polynomial)}) requires "
                f"polynomial factorization"
            )

        monic = ring.canonical(polynomial)
        return QuotientDescriptor(
            QuotientKind.LOCAL,
            [
                QuotientComponent(
                    cast(E, monic), f"Qx/({ring.render(monic)})", True, ring.one()
                )
            ],
            1,
        )

    m = _integer_modulus(ring, a)
    if m is None:
        two, three = ring.from_int(2), ring.from_int(3)
        assert not kernel.is_comaximal(ring, two, a)
        assert not kernel.is_comaximal(ring, three, a)
        assert kernel.is_comaximal(ring, two, three)
        return QuotientDescriptor(
            QuotientKind.CONNECTED_NON_LOCAL, [], 1, (two, three)
        )

    if isinstance(ring, HenriksenRing):
        _assert_radical_inside(ring, cast(HSeries, a))

    components = [
        QuotientComponent(ring.from_int(part), f"Z/{part}", True, ring.from_int(e))
        for part, e in crt_idempotents(m, factor_bound)
    ]

    return QuotientDescriptor(
        QuotientKind.LOCAL if len(components) == 1 else QuotientKind.SEMILOCAL_SUM,
        components,
        len(components),
    )


def minimal_prime_count(
    ring: Ring[E], a: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> int:
    """Count the prime ideals minimal over aR."""
    return quotient_descriptor(ring, a, factor_bound).minimal_prime_count


def is_everywhere_adequate_quotient(
    ring: Ring[E], a: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> Optional[bool]:
    """
    Decide whether R/aR is a direct sum of valuation rings.

    Return None for the connected non-local quotients, which are not decomposed.
    """
    descriptor = quotient_descriptor(ring, a, factor_bound)
    if descriptor.kind is QuotientKind.CONNECTED_NON_LOCAL:
        return None

    return all(component.is_valuation for component in descriptor.components)


@require(lambda m: m >= 1)
def finite_quotient_has_sr1(m: int) -> bool:
    """
    Check by enumeration that ℤ/m has stable range 1.

    >>> finite_quotient_has_sr1(12)
    True
    """
    units = {value for value in range(m) if math.gcd(value, m) == 1}
    for alpha in range(m):
        for beta in range(m):
            if math.gcd(math.gcd(alpha, beta), m) != 1:
                continue
            if not any((alpha + beta * t) % m in units for t in range(m)):
                return False
    return True


@require(lambda ring, a: not ring.is_zero(a))
def is_almost_sr1(ring: Ring[E], a: E) -> AlmostSr1Verdict[E]:
    """
    Decide whether R/aR has stable range 1; a negative answer carries a pair.

    Finite quotients up to :py:data:`ENUMERATION_BOUND` are enumerated. Larger ones
    are semilocal and hence of stable range 1, as are the quotients of ℚ[x]; these
    verdicts are marked as not enumerated.
    """
    if ring.is_unit(a) or isinstance(ring, PolynomialRing):
        return AlmostSr1Verdict(True, None, enumerated=False)

    m = _integer_modulus(ring, a)
    if m is not None:
        if m <= ENUMERATION_BOUND:
            return AlmostSr1Verdict(finite_quotient_has_sr1(m), None, enumerated=True)
        return AlmostSr1Verdict(True, None, enumerated=False)

    # Modulo a radical element, a + b·t is a unit exactly if it is a unit of H.
    b, c = ring.from_int(3), ring.from_int(5)
    assert sr1_reduce(ring, b, c) is None
    return AlmostSr1Verdict(False, (b, c), enumerated=False)


def _candidates(ring: Ring[E]) -> Iterator[E]:
    if isinstance(ring, PolynomialRing):
        for value in grid(SEARCH_RADIUS):
            yield cast(E, Poly([Fraction(value), Fraction(1)]))
    else:
        for value in range(2, SEARCH_RADIUS + 2):
            yield ring.from_int(value)


def find_special_elements(
    ring: Ring[E], kind: SpecialKind, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> E:
    """
    Find the first nonunit of the given kind.

    The candidates are enumerated as 2, 3, 4, … over ℤ and H, and as x, x + 1,
    x - 1, x + 2, … over ℚ[x].
    """
    predicate: Callable[[E], bool]
    if kind is SpecialKind.LOCAL_QUOTIENT:
        predicate = (
            lambda element: quotient_descriptor(ring, element, factor_bound).kind
            is QuotientKind.LOCAL
        )
    elif kind is SpecialKind.NONUNIT_ADEQUATE:
        predicate = lambda element: is_adequate(ring, element)[0]
    elif kind is SpecialKind.NONUNIT_NEAT:
        predicate = lambda element: is_neat(ring, element)[0]
    else:
        assert_never(kind)

    for candidate in _candidates(ring):
        if not ring.is_unit(candidate) and predicate(candidate):
            return candidate

    raise SearchExhausted(f"No {kind.value} element found among the candidates")
