"""lcm(n, n+1, ..., n+k): sandwich divisor/multiple, equality congruences,
and the periodic quotient maps g_k.

g_k(n) := n*(n+1)*...*(n+k) / lcm(n, ..., n+k) is an integer dividing k!,
periodic in n with period k!.  Tables of g_k over one full period are built
by dynamic programming on the gcd recurrence and searched for their
smallest period -- the open question this module produces data for.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import KTooLarge
from .exact_arith import binomial, factorial, lcm_list

__all__ = [
    "DEFAULT_GK_CAP",
    "GK_CAP_ENV_VAR",
    "GkTable",
    "t8_divisor",
    "t8_equality",
    "t9_multiple",
    "t9_equality",
    "lcm_binomials",
    "lcm_consecutive",
    "gk_direct",
    "gk_recurrence",
    "gk_closed_form",
    "gk_table",
    "write_gk_csv",
]

DEFAULT_GK_CAP = 8  # 8! = 40320 table entries; 9 is feasible but slow
GK_CAP_ENV_VAR = "LCMLAB_GK_CAP"


def _check_nk(n: int, k: int) -> None:
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")


def lcm_consecutive(n: int, k: int) -> int:
    """Exact lcm(n, n+1, ..., n+k), the oracle side of every claim here."""
    _check_nk(n, k)
    return lcm_list(range(n, n + k + 1))


def t8_divisor(n: int, k: int) -> int:
    """n * C(n+k, k), which always divides lcm(n..n+k)."""
    _check_nk(n, k)
    return n * binomial(n + k, k)


def t8_equality(n: int, k: int) -> int | None:
    """lcm(n..n+k) itself, when the congruence n(n+k) == 0 (mod k!) holds.

    Under that congruence the divisor n*C(n+k,k) is the exact lcm; returns
    None when the congruence fails.
    """
    _check_nk(n, k)
    if (n * (n + k)) % factorial(k) != 0:
        return None
    return t8_divisor(n, k)


def lcm_binomials(k: int) -> int:
    """Exact lcm of the k-th binomial row C(k,0), ..., C(k,k)."""
    if k < 0:
        raise ValueError(f"requires k >= 0, got {k}")
    return lcm_list(binomial(k, j) for j in range(k + 1))


def t9_multiple(n: int, k: int) -> int:
    """n * C(n+k,k) * lcm of the k-th binomial row; lcm(n..n+k) divides it."""
    _check_nk(n, k)
    return t8_divisor(n, k) * lcm_binomials(k)


def t9_equality(n: int, k: int) -> int | None:
    """lcm(n..n+k) itself, when n + k + 1 == 0 (mod k!); else None."""
    _check_nk(n, k)
    if (n + k + 1) % factorial(k) != 0:
        return None
    return t9_multiple(n, k)


def gk_direct(n: int, k: int) -> int:
    """g_k(n) straight from the definition: product over lcm."""
    _check_nk(n, k)
    q, rem = divmod(math.prod(range(n, n + k + 1)), lcm_consecutive(n, k))
    if rem:  # the lcm of divisors of a product always divides it
        raise ArithmeticError("product/lcm quotient unexpectedly non-integral")
    return q


def gk_recurrence(n: int, k: int, prev: int) -> int:
    """g_k(n) = gcd(k!, (n+k) * g_{k-1}(n)), given prev = g_{k-1}(n)."""
    _check_nk(n, k)
    if k < 1:
        raise ValueError(f"recurrence needs k >= 1, got {k}")
    return math.gcd(factorial(k), (n + k) * prev)


def gk_closed_form(n: int, k: int) -> int:
    """g_k(n) as the (k+1)-term gcd of falling products against factorials:

    gcd(k!, (n+k)*(k-1)!, (n+k)(n+k-1)*(k-2)!, ..., (n+k)...(n+1)*0!).
    """
    _check_nk(n, k)
    if k < 1:
        raise ValueError(f"closed form needs k >= 1, got {k}")
    g = factorial(k)
    falling = 1
    for j in range(1, k + 1):
        falling *= n + k - j + 1
        g = math.gcd(g, falling * factorial(k - j))
    return g


@dataclass(frozen=True)
class GkTable:
    """g_k over one full period: values[i] = g_k(i+1) for n = 1..k!."""

    k: int
    values: tuple[int, ...]
    smallest_period: int


def _divisors_ascending(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _smallest_period(values: tuple[int, ...]) -> int:
    # The periods of a k!-periodic map form a subgroup, so the smallest one
    # divides k!; test divisors in ascending order with full wraparound.
    size = len(values)
    for d in _divisors_ascending(size):
        if all(values[i] == values[(i + d) % size] for i in range(size)):
            return d
    return size


def gk_table(k: int, cap: int | None = None) -> GkTable:
    """Build g_k(1..k!) by chaining the gcd recurrence up from g_0.

    Each table extends the previous one periodically ((k-1)! divides k!),
    so the whole chain costs one gcd per entry.  Raises KTooLarge past the
    cap (default 8, i.e. 40320 entries).
    """
    if cap is None:
        cap = int(os.environ.get(GK_CAP_ENV_VAR, DEFAULT_GK_CAP))
    if k < 0:
        raise ValueError(f"requires k >= 0, got {k}")
    if k > cap:
        raise KTooLarge(f"k={k} exceeds the table cap {cap}")
    values: tuple[int, ...] = (1,)
    for kk in range(1, k + 1):
        size = factorial(kk)
        prev, prev_size = values, len(values)
        values = tuple(
            math.gcd(size, (n + kk) * prev[(n - 1) % prev_size])
            for n in range(1, size + 1)
        )
    return GkTable(k, values, _smallest_period(values))


def write_gk_csv(table: GkTable, f) -> None:
    """The table export: header `n,g_k`, one row per n, trailing comment."""
    f.write("n,g_k\n")
    for i, v in enumerate(table.values, start=1):
        f.write(f"{i},{v}\n")
    f.write(f"# k={table.k} smallest_period={table.smallest_period}\n")
