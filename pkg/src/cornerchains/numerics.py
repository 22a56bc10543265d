"""Exact integer and rational arithmetic helpers.

Everything downstream depends on arithmetic being exact: Python integers
never wrap, and ``fractions.Fraction`` keeps rationals reduced with a
positive denominator, which is exactly the contract the enumeration needs.
This module adds the two number-theoretic helpers the search consumes
(prime-factor counting and the minimal-N Bezout solver) on top of the
standard library.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


class DomainError(ValueError):
    """An operation was called outside its documented domain."""


class InvariantError(ValueError):
    """An internal object would violate one of its structural invariants.

    The engine never emits an object in a broken state; reaching this
    exception means a bug, and the CLI turns it into exit code 1.
    """


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, with gcd(0, 0) = 0."""
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity; omega(1) = 0.

    Plain trial division: inputs are bounded by the y-coordinates seen
    during a search, so nothing cleverer is warranted.
    """
    if n < 1:
        raise DomainError(f"omega requires n >= 1, got {n}")
    count = 0
    while n % 2 == 0:
        n //= 2
        count += 1
    p = 3
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 2
    if n > 1:
        count += 1
    return count


def bezout_minimal(b: int, c: int) -> tuple[int, int]:
    """Solve M*b - N*c = 1 over the integers with N >= 1 minimal.

    Requires b, c >= 1 coprime.  N is the least positive solution of
    N*c = -1 (mod b), so N lies in [1, b]; M is then determined.  For
    b = 1 this yields (1 + c, 1).
    """
    if b < 1 or c < 1:
        raise DomainError(f"bezout_minimal requires b, c >= 1, got ({b}, {c})")
    if math.gcd(b, c) != 1:
        raise DomainError(f"bezout_minimal requires gcd(b, c) = 1, got ({b}, {c})")
    n = (-pow(c, -1, b)) % b
    if n == 0:
        n = b
    m = (1 + n * c) // b
    assert m * b - n * c == 1
    return m, n


def rational(num: int, den: int = 1) -> Fraction:
    """Exact quotient; rejects a zero denominator with a domain error."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def rfloor(q: Fraction) -> int:
    """True floor of a rational (toward minus infinity)."""
    return math.floor(q)


def rceil(q: Fraction) -> int:
    """True ceiling of a rational (toward plus infinity)."""
    return math.ceil(q)
