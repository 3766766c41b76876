"""Divisors, lower bounds, and equality criteria for progression windows.

All divisor and bound values are exact rationals except where the claim is
inherently real-valued (the pi / square-root / fractional-exponent bounds).
Real bounds are evaluated in mpmath binary floating point with at least a
64-bit significand and multiplied by (1 - 2^-40) before comparison, so a
"holds" verdict can never be an artifact of rounding up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from mpmath import mp

from .errors import BadRange, HypothesisViolated
from .exact_arith import factorial, gcd
from .sequences import (
    ArithmeticProgression,
    QuadraticSequence,
    lcm_window,
    require_positive_coprime,
    window,
)

__all__ = [
    "BoundReport",
    "REAL_GUARD_BITS",
    "t2_divisor",
    "t3_equality",
    "t4_bounds",
    "conjecture1_bound",
    "vk_value",
    "vk_argmax",
    "t7_divisor",
    "c1_bound",
    "N2Plus1Bound",
    "n2plus1_bound",
    "lcm_squares_plus_one",
    "headline_bound",
    "t5_t6_ratio_scan",
    "real_lower_bound_holds",
]

# Relative guard applied to real-valued bounds before comparing: verdicts
# are conservative, a true violation is never masked but rounding can only
# flip a verdict toward "violation".
REAL_GUARD_BITS = 40


@dataclass(frozen=True)
class BoundReport:
    """One theorem outcome: a divisor, lower bound, or equality claim."""

    bound_name: str  # e.g. "T2_divisor", "T4_1", "Conjecture1"
    kind: str  # "divisor" | "lower-bound" | "equality"
    exact_lcm: int
    bound_value: Union[Fraction, float]
    holds: bool
    parameters: dict = field(default_factory=dict)
    note: Optional[str] = None


def _working_prec(exact_lcm: int) -> int:
    return max(96, exact_lcm.bit_length() + 16)


def real_lower_bound_holds(exact_lcm: int, bound) -> bool:
    """exact_lcm >= bound, with the downward 2^-40 relative guard applied."""
    return mp.mpf(exact_lcm) >= bound * (1 - mp.mpf(2) ** -REAL_GUARD_BITS)


def _require_increasing(s: ArithmeticProgression) -> None:
    if s.r < 1:
        raise HypothesisViolated(f"progression must be strictly increasing, got r={s.r}")


def t2_divisor(s: ArithmeticProgression, n: int) -> Fraction:
    """The rational divisor u_0...u_n / (n! * gcd(u0, u1)^n) of lcm{u_0..u_n}.

    Valid for any strictly increasing progression of nonzero integers; the
    gcd power corrects for non-coprime (u0, u1).
    """
    _require_increasing(s)
    w = window(s, 0, n)
    g = gcd(s.u0, s.term(1))
    return Fraction(math.prod(w.terms), factorial(n) * g**n)


def t3_equality(s: ArithmeticProgression, n: int) -> Optional[int]:
    """Exact lcm by the factorial-quotient criterion, when it applies.

    For coprime u0, u1: if u0*u_n == 0 (mod n!) then lcm{u_0..u_n} equals
    u_0...u_n / n! exactly, and that quotient is returned.  Returns None
    when the congruence fails (the criterion is sufficient, not necessary).
    """
    _require_increasing(s)
    if n < 1:
        raise BadRange(f"requires n >= 1, got {n}")
    if gcd(s.u0, s.term(1)) != 1:
        raise HypothesisViolated(f"u0={s.u0} and u1={s.term(1)} must be coprime")
    w = window(s, 0, n)
    if (s.u0 * s.term(n)) % factorial(n) != 0:
        return None
    q, rem = divmod(math.prod(w.terms), factorial(n))
    if rem:  # cannot happen when the congruence holds
        raise ArithmeticError("factorial quotient unexpectedly non-integral")
    return q


def t4_bounds(s: ArithmeticProgression, n: int) -> list[BoundReport]:
    """All applicable T4 lower bounds for lcm{u_0..u_n}.

    Parts 1-3 are exact rationals; part 4 carries pi and sqrt(r) and is
    evaluated as a guarded real.  Part 1's strengthened form appears only
    when (r+1) | n, part 4 only when n >= u0 - (3r+1)/2.
    """
    require_positive_coprime(s)
    if n < 0:
        raise BadRange(f"requires n >= 0, got {n}")
    u0, r = s.u0, s.r
    exact = lcm_window(window(s, 0, n))
    params = {"u0": u0, "r": r, "n": n}

    def report(name, value, holds, note=None):
        return BoundReport(name, "lower-bound", exact, value, holds, params, note)

    out = []
    b1 = Fraction(u0) * Fraction(r + 1) ** (n - 1)
    out.append(report("T4_1", b1, exact >= b1))
    if n % (r + 1) == 0:
        b1m = Fraction(u0) * Fraction(r + 1) ** n
        out.append(report("T4_1_multiple", b1m, exact >= b1m))
    b2 = Fraction(r) * Fraction(r + 1) ** (n - 1)
    out.append(report("T4_2", b2, exact >= b2))
    if n == 0:
        # the n/(n+1) prefactor vanishes; short-circuit so r=1 never forms 0^-1
        out.append(report("T4_3", Fraction(0), True))
    else:
        note = "0^0 = 1 convention for (r-1)^(n-1)" if r == 1 and n == 1 else None
        b3 = Fraction(n, n + 1) * r * (Fraction(r + 1) ** (n - 1) + Fraction(r - 1) ** (n - 1))
        out.append(report("T4_3", b3, exact >= b3, note))
    if 2 * n >= 2 * u0 - 3 * r - 1:  # exact form of n >= u0 - (3r+1)/2
        with mp.workprec(_working_prec(exact)):
            b4 = mp.sqrt(r) / mp.pi * mp.power(r + 1, n - 1 + mp.mpf(u0) / r)
            out.append(report("T4_4", float(b4), real_lower_bound_holds(exact, b4)))
    return out


def conjecture1_bound(s: ArithmeticProgression, n: int) -> Fraction:
    """The confirmed bound u0*(r+1)^n for positive coprime progressions."""
    require_positive_coprime(s)
    if n < 0:
        raise BadRange(f"requires n >= 0, got {n}")
    return Fraction(s.u0) * Fraction(s.r + 1) ** n


def vk_value(s: ArithmeticProgression, n: int, k: int) -> Fraction:
    """The tail quotient u_k...u_n / (n-k)!, as an exact rational."""
    if not 0 <= k <= n:
        raise BadRange(f"need 0 <= k <= n, got k={k}, n={n}")
    return Fraction(math.prod(s.term(i) for i in range(k, n + 1)), factorial(n - k))


def vk_argmax(s: ArithmeticProgression, n: int) -> int:
    """The index max{0, floor((n - u0)/(r + 1)) + 1} maximizing the tail quotient."""
    require_positive_coprime(s)
    if n < 0:
        raise BadRange(f"requires n >= 0, got {n}")
    return max(0, (n - s.u0) // (s.r + 1) + 1)


def t7_divisor(s: QuadraticSequence, m: int, n: int) -> Fraction:
    """The rational divisor of lcm{u_m..u_n} for quadratic sequences:

        2 * u_0...u_n / (2n)!                  if (t, m) = (0, 0)
        (2m+t-1)! * u_m...u_n / (2n+t)!        otherwise
    """
    if not 0 <= m < n:
        raise BadRange(f"need 0 <= m < n, got m={m}, n={n}")
    w = window(s, m, n)
    if (s.t, m) == (0, 0):
        return Fraction(2 * math.prod(w.terms), factorial(2 * n))
    return Fraction(factorial(2 * m + s.t - 1) * math.prod(w.terms), factorial(2 * n + s.t))


def c1_bound(s: QuadraticSequence, n: int) -> Fraction:
    """Closed-form lower bound for lcm{u_0..u_n} of a quadratic sequence:

        2b * (a/4)^n            if t = 0
        b/(t*2^t) * (a/4)^n     if t >= 1

    Nontrivial only when a >= 5; exact rational either way.
    """
    if n < 1:
        raise BadRange(f"requires n >= 1, got {n}")
    window(s, 0, n)  # enforce nonzero terms
    growth = Fraction(s.a, 4) ** n
    if s.t == 0:
        return 2 * s.b * growth
    return Fraction(s.b, s.t * 2**s.t) * growth


def lcm_squares_plus_one(n: int) -> int:
    """Exact lcm{1^2+1, 2^2+1, ..., n^2+1}."""
    if n < 1:
        raise BadRange(f"requires n >= 1, got {n}")
    out = 1
    for k in range(1, n + 1):
        out = math.lcm(out, k * k + 1)
    return out


@dataclass(frozen=True)
class N2Plus1Bound:
    """Lower bounds for lcm{1^2+1..n^2+1} via the subsequence (r*k)^2 + 1."""

    n: int
    r: int
    k: int  # floor(n / r), the subsequence length actually used
    exact: Fraction  # 2 * (r^2/4)^k, backed by the divisor chain
    closed_form: float  # (8/r^2) * ((r/2)^(2/r))^n, for reporting


def n2plus1_bound(n: int, r: int) -> N2Plus1Bound:
    """Both forms of the lcm{k^2+1} lower bound for a subsequence stride r >= 3."""
    if r < 3:
        raise BadRange(f"stride must be >= 3, got r={r}")
    if n < r:
        raise BadRange(f"requires n >= r, got n={n}, r={r}")
    k = n // r
    exact = 2 * Fraction(r * r, 4) ** k
    with mp.workprec(96):
        closed = 8 / mp.mpf(r * r) * mp.power(mp.mpf(r) / 2, mp.mpf(2 * n) / r)
    return N2Plus1Bound(n, r, k, exact, float(closed))


# The printed optimal-stride constants, read as exact decimals 0.32 and 1.442.
HEADLINE_COEFF = Fraction(8, 25)
HEADLINE_BASE = Fraction(721, 500)


def headline_bound(n: int) -> Fraction:
    """The flagship bound 0.32 * 1.442^n for lcm{1^2+1..n^2+1}, n >= 1."""
    if n < 1:
        raise BadRange(f"requires n >= 1, got {n}")
    return HEADLINE_COEFF * HEADLINE_BASE**n


def t5_t6_ratio_scan(family: str, deltas, a: int = 0, b: int = 0) -> list[tuple[int, float]]:
    """Optimality ratios along the two witness progression families.

    T6 (delta): u0 = 3*delta + 2, r = 2*delta + 1, ratio
        u0 / (sqrt(r) * (r+1)^(u0/r - 1)),
    the per-delta cap on the best constant in the T4 part-4 bound; it rises
    from ~1.146 at delta=1 toward the limit 3/2.

    T5 (a, b, delta): u0 = a*b*delta + 1, r = b^2*delta, ratio
        u0*u1 / (sqrt(r) * (r+1)^(u0/r)),
    which decays to 0 whenever a/b > 3/2, witnessing that the -3/2
    coefficient in part 4's applicability threshold cannot be improved.
    """
    deltas = list(deltas)
    if not deltas:
        raise BadRange("empty delta range")
    if family not in ("T5", "T6"):
        raise ValueError(f"unknown family {family!r}")
    if family == "T5" and (a < 1 or b < 1):
        raise BadRange(f"T5 family needs a >= 1 and b >= 1, got a={a}, b={b}")
    out = []
    with mp.workprec(96):
        for d in deltas:
            if d < 1:
                raise BadRange(f"delta must be >= 1, got {d}")
            if family == "T6":
                u0, r = 3 * d + 2, 2 * d + 1
                ratio = u0 / (mp.sqrt(r) * mp.power(r + 1, mp.mpf(u0) / r - 1))
            else:
                u0, r = a * b * d + 1, b * b * d
                ratio = u0 * (u0 + r) / (mp.sqrt(r) * mp.power(r + 1, mp.mpf(u0) / r))
            out.append((d, float(ratio)))
    return out
