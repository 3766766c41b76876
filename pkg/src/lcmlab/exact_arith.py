"""Exact integer and rational arithmetic underlying every divisibility check.

Integers are plain Python ``int`` (arbitrary precision); rationals are
``fractions.Fraction``, which is kept normalized by construction (positive
denominator, lowest terms, structural equality).  Everything here is a pure
function, safe to call from any number of threads.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import ZeroTerm

__all__ = [
    "FACTORIAL_CACHE_CAP",
    "gcd",
    "lcm",
    "lcm_list",
    "factorial",
    "binomial",
    "is_prime",
    "valuation",
    "is_integer_multiple",
    "lemma_t3_check",
]

# Factorials up to this argument are cached (period-table construction asks
# for the same k! on every step); larger arguments fall through to math.factorial.
FACTORIAL_CACHE_CAP = 10_000

_factorials: list[int] = [1]
_factorials_lock = threading.Lock()


def gcd(x: int, y: int) -> int:
    """Non-negative greatest common divisor; gcd(0, 0) = 0."""
    return math.gcd(x, y)


def lcm(x: int, y: int) -> int:
    """Non-negative least common multiple; lcm(x, 0) = 0."""
    return math.lcm(x, y)


def lcm_list(xs) -> int:
    """Fold of binary lcm over absolute values of a nonempty sequence.

    Raises ZeroTerm on any zero element: every claim this library checks is
    stated for sequences of nonzero integers, so a zero is a caller bug.
    """
    terms = list(xs)
    if not terms:
        raise ValueError("lcm_list requires at least one term")
    for x in terms:
        if x == 0:
            raise ZeroTerm("lcm_list term is zero")
    return math.lcm(*terms)


def factorial(n: int) -> int:
    """Exact n!, cached up to FACTORIAL_CACHE_CAP."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    if n < len(_factorials):
        return _factorials[n]
    if n > FACTORIAL_CACHE_CAP:
        return math.factorial(n)
    with _factorials_lock:
        while len(_factorials) <= n:
            _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_prime(p: int) -> bool:
    """Trial-division primality test (small inputs only)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def valuation(p: int, x: int) -> int:
    """Largest e with p**e dividing x, for prime p and x != 0."""
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    if not is_prime(p):
        raise ValueError(f"valuation requires a prime base, got {p}")
    x = abs(x)
    e = 0
    while x % p == 0:
        e += 1
        x //= p
    return e


def is_integer_multiple(x, y) -> bool:
    """True iff x/y is an integer, for exact rationals x and nonzero y."""
    q = Fraction(x) / Fraction(y)
    return q.denominator == 1


def lemma_t3_check(x: int, y: int, n: int) -> bool:
    """Divisibility step behind the T3 factorial-quotient equality criterion.

    Checks the implication: if x - y == 0 (mod n) and x*y == 0 (mod n!),
    then n divides both x and y.  True vacuously when the premises fail.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    if (x - y) % n != 0 or (x * y) % factorial(n) != 0:
        return True
    return x % n == 0 and y % n == 0
