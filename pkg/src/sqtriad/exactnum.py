"""Exact integer and rational scalars.

Integers are Python ints; rationals are :class:`fractions.Fraction`, which
already keeps every value in lowest terms with a positive denominator.  This
module adds the perfect-square machinery the rest of the package leans on and
the strict decimal string interchange used by the CLI.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

__all__ = [
    "DomainError",
    "FactorizationIncomplete",
    "Rational",
    "isqrt",
    "perfect_square",
    "rational_square_root",
    "largest_square_divisor",
    "square_part_factorization",
    "parse_integer",
    "parse_rational",
    "format_rational",
]


class DomainError(ValueError):
    """An argument lies outside the domain of an exact operation."""


class FactorizationIncomplete(ArithmeticError):
    """Factoring gave up before the square part of an integer was settled.

    ``known_square`` divides the input and is a perfect square; ``cofactor``
    is the composite remainder whose square factors (if any) are unknown.
    """

    def __init__(self, n: int, known_square: int, cofactor: int):
        self.n = n
        self.known_square = known_square
        self.cofactor = cofactor
        super().__init__(
            f"could not factor {len(str(cofactor))}-digit cofactor of {n}"
        )


# Quadratic residues for a cheap rejection filter.  Together the three moduli
# throw away roughly 99% of non-squares before any isqrt is computed.
_QR64 = frozenset(i * i % 64 for i in range(64))
_QR63 = frozenset(i * i % 63 for i in range(63))
_QR65 = frozenset(i * i % 65 for i in range(65))


def isqrt(n: int) -> int:
    """Return the largest r with r*r <= n."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def perfect_square(n: int) -> int | None:
    """Return r >= 0 with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    if n & 63 not in _QR64 or n % 63 not in _QR63 or n % 65 not in _QR65:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_square_root(r: Fraction) -> Fraction | None:
    """Non-negative square root of a rational, or None if it is not a square."""
    r = Fraction(r)
    num = perfect_square(r.numerator)
    if num is None:
        return None
    den = perfect_square(r.denominator)
    if den is None:
        return None
    return Fraction(num, den)


# --- square part ---------------------------------------------------------

TRIAL_BOUND = 1 << 16
_RHO_STEPS = 5_000
_PM1_BOUND = 20_000
_ECM_CURVES = 4


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES = _small_primes(TRIAL_BOUND)


def _split(n: int) -> int | None:
    """Find a nontrivial factor of composite n, or None within budget."""
    from sympy.ntheory import pollard_pm1, pollard_rho
    from sympy.ntheory.ecm import ecm

    d = pollard_rho(n, max_steps=_RHO_STEPS, retries=0)
    if d:
        return int(d)
    d = pollard_pm1(n, B=_PM1_BOUND)
    if d:
        return int(d)
    try:
        factors = ecm(n, B1=2_000, B2=50_000, max_curve=_ECM_CURVES)
    except ValueError:
        return None
    for f in sorted(factors):
        if 1 < f < n:
            return int(f)
    return None


def square_part_factorization(n: int) -> dict[int, int]:
    """Factor n >= 1 far enough to know its square part.

    Returns the prime factorization as a mapping prime -> exponent.  Trial
    division runs up to TRIAL_BOUND; larger cofactors go through bounded rho,
    p-1 and ECM attempts.  Raises FactorizationIncomplete when a composite
    cofactor resists all of them.
    """
    from sympy.ntheory import isprime

    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")
    original = n
    found: dict[int, int] = {}
    for p in _PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    pending = [(n, 1)] if n > 1 else []
    stuck: list[int] = []
    while pending:
        m, mult = pending.pop()
        if m == 1:
            continue
        if m < TRIAL_BOUND * TRIAL_BOUND or isprime(m):
            # No factor below TRIAL_BOUND, so m below its square is prime.
            found[m] = found.get(m, 0) + mult
            continue
        r = perfect_square(m)
        if r is not None:
            pending.append((r, 2 * mult))
            continue
        d = _split(m)
        if d is None:
            stuck.append(m)
            continue
        g = math.gcd(d, m // d)
        if g == 1:
            pending.extend([(d, mult), (m // d, mult)])
        else:
            # Shared factor: peel g out completely before recursing.
            e = 0
            while m % g == 0:
                m //= g
                e += 1
            pending.extend([(g, e * mult), (m, mult)])
    if stuck:
        known = 1
        for p, e in found.items():
            known *= p ** (e - e % 2)
        cofactor = math.prod(stuck)
        raise FactorizationIncomplete(original, known, cofactor)
    return found


def largest_square_divisor(n: int) -> int:
    """Largest perfect square dividing the positive integer n."""
    if n < 1:
        raise DomainError(f"largest_square_divisor needs n >= 1, got {n}")
    result = 1
    for f, e in square_part_factorization(n).items():
        result *= f ** (e - e % 2)
    return result


# --- decimal interchange -------------------------------------------------

_INT_RE = re.compile(r"[+-]?[0-9]+")
_RAT_RE = re.compile(r"([+-]?[0-9]+)(?:/([0-9]+))?")


def parse_integer(text: str) -> int:
    if not _INT_RE.fullmatch(text):
        raise DomainError(f"not a decimal integer: {text!r}")
    return int(text)


def parse_rational(text: str) -> Fraction:
    """Parse ``"num"`` or ``"num/den"``; decimals and exponents are rejected."""
    match = _RAT_RE.fullmatch(text)
    if not match:
        raise DomainError(f"not a rational of the form num/den: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(r: Fraction | int) -> str:
    return str(Fraction(r))
