"""Exact integer/rational arithmetic helpers.

Python integers are already arbitrary precision and `fractions.Fraction`
keeps gcd-reduced numerator/denominator pairs with a positive denominator,
so they serve directly as the exact scalar types everything else builds on.
This module adds the number-theoretic bits: deterministic primality,
next-prime search, binomial coefficients, and bit-exact string round trips.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZeroError, OutOfRangeError

Rational = Fraction

# Witness set 2,3,5,7,11,13,17 is a proven deterministic Miller-Rabin base
# set below 3.3e14; every prime this engine ever selects is far smaller.
MILLER_RABIN_DETERMINISTIC_BOUND = 330_000_000_000_000
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 3.3e14."""
    if n < 0:
        raise OutOfRangeError("is_prime requires n >= 0")
    if n >= MILLER_RABIN_DETERMINISTIC_BOUND:
        raise OutOfRangeError(
            f"deterministic primality only guaranteed below "
            f"{MILLER_RABIN_DETERMINISTIC_BOUND}"
        )
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_above(bound: int) -> int:
    """Smallest prime strictly greater than ``bound``."""
    if bound < 0:
        raise OutOfRangeError("next_prime_above requires bound >= 0")
    n = bound + 1
    if n <= 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_prime(n):
        n += 2
    return n


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        raise OutOfRangeError(f"binomial requires 0 <= k <= n, got ({n}, {k})")
    return math.comb(n, k)


def prime_factors(n: int, trial_bound: int = 1_000_000) -> list[int]:
    """Distinct prime factors of |n| by trial division up to ``trial_bound``,
    with a primality check on the remaining cofactor.  Returns the factors
    found; a residual composite cofactor beyond the bound is dropped (the
    constant terms this engine meets are desk scale)."""
    n = abs(n)
    out = []
    if n <= 1:
        return out
    for p in range(2, trial_bound + 1):
        if p * p > n:
            break
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
    if n > 1:
        if n < MILLER_RABIN_DETERMINISTIC_BOUND and is_prime(n):
            out.append(n)
        elif n <= trial_bound * trial_bound:
            # below the square of the trial bound an unfactored residue is prime
            out.append(n)
    return out


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Field operation dispatch; division by zero raises."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise DivisionByZeroError("rational division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def parse_rational(text: str) -> Fraction:
    """Parse '123' or '-4/6' (canonicalized) exactly."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        d = int(den)
        if d == 0:
            raise DivisionByZeroError("zero denominator")
        return Fraction(int(num), d)
    return Fraction(int(text), 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_rational_square(q: Fraction) -> bool:
    """Exact squareness test via integer square roots (no floating point)."""
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    rn = math.isqrt(n)
    rd = math.isqrt(d)
    return rn * rn == n and rd * rd == d


def rational_sqrt(q: Fraction) -> Fraction:
    if not is_rational_square(q):
        raise OutOfRangeError(f"{q} is not a rational square")
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))
