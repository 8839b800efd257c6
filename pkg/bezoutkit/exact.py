"""Provide exact integer and rational arithmetic underpinning all the rings."""
import functools
import math
import operator
from fractions import Fraction
from typing import List, Sequence, Tuple

from icontract import require, ensure

from bezoutkit.common import FactorizationBoundExceeded, ZeroDenominator

#: Trial division is never carried out with divisors above this bound
DEFAULT_FACTOR_BOUND = 10**6


@ensure(lambda result: result[0] >= 0)
@ensure(lambda a, b, result: result[1] * a + result[2] * b == result[0])
@ensure(lambda a, b, result: (result[0] == 0) == (a == 0 and b == 0))
def int_gcd_ext(a: int, b: int) -> Tuple[int, int, int]:
    """
    Compute the gcd with the Bezout coefficients by the extended Euclid.

    >>> int_gcd_ext(12, 18)
    (6, -1, 1)
    >>> int_gcd_ext(5, 0)
    (5, 1, 0)
    >>> int_gcd_ext(0, 0)
    (0, 0, 0)
    """
    if a == 0 and b == 0:
        return 0, 0, 0

    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1

    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t

    if old_r < 0:
        return -old_r, -old_s, -old_t

    return old_r, old_s, old_t


def rat_canonical(num: int, den: int) -> Fraction:
    """
    Build the reduced rational ``num/den`` with a positive denominator.

    >>> rat_canonical(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ZeroDenominator(f"The denominator of {num}/{den} is zero")

    return Fraction(num, den)


@require(lambda c, d: c != 0 or d != 0)
@ensure(lambda result: result > 0)
def rat_gcd(c: Fraction, d: Fraction) -> Fraction:
    """
    Compute the positive generator q of the additive group cℤ + dℤ.

    >>> rat_gcd(Fraction(1, 2), Fraction(1, 3))
    Fraction(1, 6)
    """
    numerator = math.gcd(c.numerator * d.denominator, d.numerator * c.denominator)
    return Fraction(numerator, c.denominator * d.denominator)


def parse_rat(text: str) -> Fraction:
    """
    Parse a decimal rational of the form ``p`` or ``p/q``.

    Raise :py:class:`ValueError` if the text is malformed.

    >>> parse_rat("-3/6")
    Fraction(-1, 2)
    """
    parts = text.strip().split("/")
    if len(parts) == 1:
        return Fraction(int(parts[0], 10))

    if len(parts) == 2:
        return rat_canonical(int(parts[0], 10), int(parts[1], 10))

    raise ValueError(f"Expected a rational of the form p/q, but got: {text!r}")


def render_rat(value: Fraction) -> str:
    """Render the rational as ``p`` or ``p/q``."""
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


@require(lambda n: n != 0)
@require(lambda bound: bound >= 2)
@ensure(
    lambda n, result: functools.reduce(
        operator.mul, (p**alpha for p, alpha in result), 1
    )
    == abs(n)
)
def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> List[Tuple[int, int]]:
    """
    Factor ``|n|`` into (prime, exponent) pairs in increasing order of primes.

    The cofactor left after trial division is certified prime only if no divisor
    up to its square root was skipped; otherwise the bound is reported as exceeded.

    >>> factorize(360)
    [(2, 3), (3, 2), (5, 1)]
    """
    remaining = abs(n)
    result = []  # type: List[Tuple[int, int]]

    divisor = 2
    while divisor * divisor <= remaining:
        if divisor > bound:
            raise FactorizationBoundExceeded(
                f"Trial division of {n} needs divisors above the bound {bound}; "
                f"the cofactor {remaining} is not certified"
            )

        if remaining % divisor == 0:
            exponent = 0
            while remaining % divisor == 0:
                remaining //= divisor
                exponent += 1
            result.append((divisor, exponent))

        divisor = 3 if divisor == 2 else divisor + 2

    if remaining > 1:
        result.append((remaining, 1))

    return result


def prime_power_parts(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> List[int]:
    """
    List the prime-power parts p^α of ``|n|`` in increasing order of primes.

    >>> prime_power_parts(360)
    [8, 9, 5]
    """
    return [p**alpha for p, alpha in factorize(n, bound)]


def is_prime_power(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Check that ``|n|`` is p^α with α ≥ 1."""
    return abs(n) >= 2 and len(factorize(n, bound)) == 1


@require(lambda moduli: len(moduli) >= 1)
@require(lambda residues, moduli: len(residues) == len(moduli))
@require(lambda moduli: all(modulus >= 1 for modulus in moduli))
@ensure(
    lambda residues, moduli, result: all(
        (result - residue) % modulus == 0
        for residue, modulus in zip(residues, moduli)
    )
)
def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """
    Solve the system x ≡ residues[i] (mod moduli[i]) for pairwise coprime moduli.

    The solution is reduced to the range [0, ∏ moduli).

    >>> crt([0, 1], [2, 3])
    4
    """
    product = functools.reduce(operator.mul, moduli, 1)

    result = 0
    for residue, modulus in zip(residues, moduli):
        cofactor = product // modulus
        gcd, _, inverse = int_gcd_ext(modulus, cofactor)
        if gcd != 1:
            raise ValueError(f"The moduli are not pairwise coprime: {list(moduli)}")
        result += residue * inverse * cofactor

    return result % product


@require(lambda modulus: modulus >= 2)
def crt_idempotents(
    modulus: int, bound: int = DEFAULT_FACTOR_BOUND
) -> List[Tuple[int, int]]:
    """
    List the primitive idempotents of ℤ/modulus, one per prime-power part.

    Each entry is (prime-power part, idempotent), where the idempotent is 1 modulo
    its part and 0 modulo all the other parts.

    >>> crt_idempotents(12)
    [(4, 9), (3, 4)]
    """
    parts = prime_power_parts(modulus, bound)
    if len(parts) == 1:
        return [(parts[0], 1)]

    return [
        (part, crt([1 if other == part else 0 for other in parts], parts))
        for part in parts
    ]
