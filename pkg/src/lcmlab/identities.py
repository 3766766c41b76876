"""Exact checks for the algebraic identities the bound machinery rests on.

The central engine: if sum(1/(alpha_i*beta_i)) = 1/gamma for nonzero integers,
then lcm{alpha_i} * lcm{beta_i} is a multiple of gamma.  Window difference
products supply the beta side; everything is verified in exact rational
arithmetic, never floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ZeroSum, ZeroTerm
from .exact_arith import binomial, is_integer_multiple, lcm_list
from .sequences import SequenceWindow, difference_products, lcm_window

__all__ = [
    "lemma1_gamma",
    "theorem1_multiple_check",
    "identity8_check",
    "identity9_check",
    "central_binomial_estimate_check",
]


def lemma1_gamma(alphas, betas) -> Fraction:
    """The reciprocal of sum(1/(alpha_i*beta_i)), as an exact rational.

    When the sum is 1/gamma for an integer gamma, lcm{alpha} * lcm{beta} is
    a multiple of gamma.  The rational return also lets callers detect
    candidate (alpha, beta) families that fail to produce an integer.
    """
    alphas = list(alphas)
    betas = list(betas)
    if not alphas or len(alphas) != len(betas):
        raise ValueError(f"need equal nonempty lengths, got {len(alphas)} and {len(betas)}")
    for x in alphas + betas:
        if x == 0:
            raise ZeroTerm("entries must be nonzero")
    s = sum(Fraction(1, a * b) for a, b in zip(alphas, betas))
    if s == 0:
        raise ZeroSum("reciprocal sum is zero, no quotient exists")
    return 1 / s


def theorem1_multiple_check(w: SequenceWindow) -> bool:
    """lcm(terms) * lcm(|difference products|) is a multiple of prod(terms).

    Holds for every strictly increasing window of nonzero integers; this is
    the T1 claim that seeds all the divisor results.
    """
    terms = w.terms
    if any(b <= a for a, b in zip(terms, terms[1:])):
        raise ValueError("window terms must be strictly increasing")
    big = lcm_window(w) * lcm_list(difference_products(w))
    return is_integer_multiple(big, math.prod(terms))


def identity8_check(n: int, x) -> bool:
    """sum_{k=1..n} k*C(n,k)*x^(n-k+1) == n*x*(x+1)^(n-1), exactly."""
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    x = Fraction(x)
    lhs = sum(k * binomial(n, k) * x ** (n - k + 1) for k in range(1, n + 1))
    return lhs == n * x * (x + 1) ** (n - 1)


def identity9_check(n: int, x) -> bool:
    """Odd-index half of identity 8:

    sum over odd k in 1..n of k*C(n,k)*x^(n-k+1)
        == (1/2)*n*x*((x+1)^(n-1) + (x-1)^(n-1)), exactly.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    x = Fraction(x)
    lhs = sum(k * binomial(n, k) * x ** (n - k + 1) for k in range(1, n + 1, 2))
    rhs = Fraction(n, 2) * x * ((x + 1) ** (n - 1) + (x - 1) ** (n - 1))
    return lhs == rhs


def central_binomial_estimate_check(k: int) -> bool:
    """C(2k+1, k) < sqrt(2)*4^k/sqrt(k + 3/2), checked as exact integers.

    Both sides are positive, so squaring and clearing the denominator gives
    the equivalent integer inequality C(2k+1,k)^2 * (2k+3) < 4 * 16^k.
    """
    if k < 0:
        raise ValueError(f"requires k >= 0, got {k}")
    return binomial(2 * k + 1, k) ** 2 * (2 * k + 3) < 4 * 16**k
