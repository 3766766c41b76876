"""Sequence families and finite windows over which lcm claims are checked.

Two parametric families are supported -- arithmetic progressions
u_k = u0 + k*r and quadratic sequences u_k = a*k*(k+t) + b -- plus explicit
term lists.  A window materializes the terms u_m..u_n eagerly; sizes in
scope are a few thousand terms at most.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadRange, HypothesisViolated, RepeatedTerm, ZeroTerm
from .exact_arith import lcm_list

__all__ = [
    "ArithmeticProgression",
    "QuadraticSequence",
    "SequenceWindow",
    "require_positive_coprime",
    "window",
    "explicit_window",
    "lcm_window",
    "difference_products",
]


@dataclass(frozen=True)
class ArithmeticProgression:
    """u_k = u0 + k*r.  No constructor validation: divisor claims only need
    strict increase and nonzero terms, which are checked per window; the
    stronger positivity/coprimality hypotheses have a dedicated validator."""

    u0: int
    r: int

    def term(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"negative index {k}")
        return self.u0 + k * self.r


@dataclass(frozen=True)
class QuadraticSequence:
    """u_k = a*k*(k+t) + b with a >= 1, t >= 0, gcd(a, b) = 1 (enforced)."""

    a: int
    t: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise HypothesisViolated(f"leading coefficient a must be >= 1, got {self.a}")
        if self.t < 0:
            raise HypothesisViolated(f"shift t must be >= 0, got {self.t}")
        if math.gcd(self.a, self.b) != 1:
            raise HypothesisViolated(f"a={self.a} and b={self.b} must be coprime")

    def term(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"negative index {k}")
        return self.a * k * (k + self.t) + self.b

    def shifted(self, m: int) -> "QuadraticSequence":
        """The sequence v_k = u_{k+m}, again quadratic with shifted parameters."""
        if m < 0:
            raise ValueError(f"negative shift {m}")
        return QuadraticSequence(self.a, 2 * m + self.t, self.a * m * (m + self.t) + self.b)


def require_positive_coprime(s: ArithmeticProgression) -> ArithmeticProgression:
    """Validate the lower-bound hypotheses: u0 >= 1, r >= 1, gcd(u0, r) = 1."""
    if s.u0 < 1:
        raise HypothesisViolated(f"first term must be positive, got u0={s.u0}")
    if s.r < 1:
        raise HypothesisViolated(f"difference must be positive, got r={s.r}")
    if math.gcd(s.u0, s.r) != 1:
        raise HypothesisViolated(f"u0={s.u0} and r={s.r} must be coprime")
    return s


@dataclass(frozen=True)
class SequenceWindow:
    """Terms u_m..u_n of some sequence, all nonzero."""

    terms: tuple[int, ...]
    start_index: int
    end_index: int

    def __post_init__(self) -> None:
        if len(self.terms) != self.end_index - self.start_index + 1 or not self.terms:
            raise BadRange(
                f"window [{self.start_index}, {self.end_index}] does not match {len(self.terms)} terms"
            )
        for i, x in enumerate(self.terms):
            if x == 0:
                raise ZeroTerm(f"term at index {self.start_index + i} is zero")

    def __len__(self) -> int:
        return len(self.terms)


def window(s, m: int, n: int) -> SequenceWindow:
    """Materialize terms u_m..u_n of a sequence family (anything with .term)."""
    if m < 0 or n < m:
        raise BadRange(f"need 0 <= m <= n, got m={m}, n={n}")
    return SequenceWindow(tuple(s.term(k) for k in range(m, n + 1)), m, n)


def explicit_window(terms, start_index: int = 0) -> SequenceWindow:
    """Wrap an explicit term list as a window starting at start_index."""
    terms = tuple(terms)
    return SequenceWindow(terms, start_index, start_index + len(terms) - 1)


def lcm_window(w: SequenceWindow) -> int:
    """Exact lcm of the window terms (the brute-force side of every claim)."""
    return lcm_list(w.terms)


def difference_products(w: SequenceWindow) -> list[int]:
    """For each j, the product over i != j of (u_i - u_j).

    Direct O(n^2) evaluation; a singleton window yields [1] (empty product).
    """
    terms = w.terms
    if len(set(terms)) != len(terms):
        raise RepeatedTerm("difference products need pairwise distinct terms")
    out = []
    for j, uj in enumerate(terms):
        p = 1
        for i, ui in enumerate(terms):
            if i != j:
                p *= ui - uj
        out.append(p)
    return out
