"""Parameter sweeps driving every claim against the brute-force lcm oracle.

A scan enumerates cases in lexicographic parameter order, evaluates each
case independently (so the CLI can fan cases out to worker processes), and
tags every record with a verdict:

    holds           the claim checks out for this case
    equality        an equality criterion fired and matched the exact lcm
    violation       the claim failed -- impossible for a correct build
    not-applicable  the case does not meet the claim's hypotheses
"""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bounds, consecutive, identities
from .errors import ZeroTerm
from .exact_arith import binomial, factorial, gcd, is_integer_multiple
from .sequences import (
    ArithmeticProgression,
    QuadraticSequence,
    explicit_window,
    lcm_window,
    window,
)

__all__ = [
    "THEOREMS",
    "HOLDS",
    "EQUALITY",
    "VIOLATION",
    "NOT_APPLICABLE",
    "default_ranges",
    "generate_cases",
    "evaluate_case",
    "run_scan",
    "classic_rows",
    "classic_below_regions",
]

THEOREMS = ("T1", "T2", "T3", "T4", "Conj1", "T6", "T7", "C1", "T8", "T9", "GK", "N2P1", "IDENTITIES")

HOLDS = "holds"
EQUALITY = "equality"
VIOLATION = "violation"
NOT_APPLICABLE = "not-applicable"

# Exact rationals used by the identity sweep (the interesting edge values:
# negatives, halves, zero, and a non-dyadic fraction).
IDENTITY_X_VALUES = (
    Fraction(-3),
    Fraction(-1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(7, 3),
)

_DEFAULT_RANGES = {
    "T1": {"count": range(1000, 1001), "max-len": range(8, 9), "max-abs": range(50, 51), "seed": range(0, 1)},
    "T2": {"u0": range(1, 16), "r": range(1, 16), "n": range(0, 11)},
    "T3": {"u0": range(1, 16), "r": range(1, 16), "n": range(0, 11)},
    "T4": {"u0": range(1, 13), "r": range(1, 13), "n": range(0, 13)},
    "Conj1": {"u0": range(1, 13), "r": range(1, 13), "n": range(0, 13)},
    "T6": {"delta": range(1, 1001)},
    "T7": {"a": range(1, 7), "t": range(0, 5), "b": range(-10, 11), "m": range(0, 8), "n": range(1, 9)},
    "C1": {"a": range(5, 7), "t": range(0, 5), "b": range(1, 11), "n": range(1, 9)},
    "T8": {"n": range(1, 201), "k": range(0, 9)},
    "T9": {"n": range(1, 201), "k": range(0, 9)},
    "GK": {"k": range(1, 9), "n": range(1, 201)},
    "N2P1": {"r": range(3, 8), "n": range(1, 61)},
    "IDENTITIES": {"n": range(1, 31)},
}


def default_ranges(theorem: str) -> dict[str, range]:
    return dict(_DEFAULT_RANGES[theorem])


def _merged(theorem: str, ranges: dict | None) -> dict[str, range]:
    merged = default_ranges(theorem)
    for name, value in (ranges or {}).items():
        if name in merged:
            merged[name] = value
    return merged


def generate_cases(theorem: str, ranges: dict | None = None) -> list[dict]:
    """All case dictionaries for a scan, in lexicographic parameter order."""
    r = _merged(theorem, ranges)
    if theorem == "T1":
        count = r["count"][-1]
        max_len = r["max-len"][-1]
        max_abs = r["max-abs"][-1]
        seed = r["seed"][-1]
        rng = random.Random(seed)
        population = [x for x in range(-max_abs, max_abs + 1) if x != 0]
        cases = []
        for i in range(count):
            length = rng.randint(1, max_len)
            terms = tuple(sorted(rng.sample(population, length)))
            cases.append({"case": i, "terms": terms})
        return cases
    if theorem in ("T2", "T3", "T4", "Conj1"):
        return [
            {"u0": u0, "r": rr, "n": n}
            for u0 in r["u0"]
            for rr in r["r"]
            for n in r["n"]
        ]
    if theorem == "T6":
        return [{"delta": d} for d in r["delta"]]
    if theorem == "T7":
        return [
            {"a": a, "t": t, "b": b, "m": m, "n": n}
            for a in r["a"]
            for t in r["t"]
            for b in r["b"]
            for m in r["m"]
            for n in r["n"]
            if m < n
        ]
    if theorem == "C1":
        return [
            {"a": a, "t": t, "b": b, "n": n}
            for a in r["a"]
            for t in r["t"]
            for b in r["b"]
            for n in r["n"]
        ]
    if theorem in ("T8", "T9"):
        return [{"n": n, "k": k} for n in r["n"] for k in r["k"]]
    if theorem == "GK":
        return [{"k": k, "n": n} for k in r["k"] for n in r["n"]]
    if theorem == "N2P1":
        return [{"r": rr, "n": n} for rr in r["r"] for n in r["n"]]
    if theorem == "IDENTITIES":
        cases = []
        for n in r["n"]:
            for x in IDENTITY_X_VALUES:
                cases.append({"n": n, "check": "identity8", "x": x})
            for x in IDENTITY_X_VALUES:
                cases.append({"n": n, "check": "identity9", "x": x})
            cases.append({"n": n, "check": "central_binomial", "x": Fraction(0)})
        return cases
    raise ValueError(f"unknown theorem {theorem!r}")


def _record(theorem: str, case: dict, exact_lcm, claim, verdict: str) -> dict:
    rec = {"theorem": theorem}
    for key, value in case.items():
        rec[key] = str(value) if isinstance(value, Fraction) else value
    rec["exact_lcm"] = "" if exact_lcm is None else str(exact_lcm)
    rec["claim"] = "" if claim is None else (repr(claim) if isinstance(claim, float) else str(claim))
    rec["verdict"] = verdict
    return rec


def _eval_t1(case: dict) -> tuple:
    w = explicit_window(case["terms"])
    ok = identities.theorem1_multiple_check(w)
    return lcm_window(w), math.prod(w.terms), HOLDS if ok else VIOLATION


def _eval_ap(theorem: str, case: dict) -> tuple:
    u0, r, n = case["u0"], case["r"], case["n"]
    s = ArithmeticProgression(u0, r)
    exact = lcm_window(window(s, 0, n))
    if theorem == "T2":
        d = bounds.t2_divisor(s, n)
        return exact, d, HOLDS if is_integer_multiple(exact, d) else VIOLATION
    coprime = gcd(u0, u0 + r) == 1
    if theorem == "T3":
        if not coprime or n < 1:
            return exact, None, NOT_APPLICABLE
        v = bounds.t3_equality(s, n)
        if v is None:
            return exact, None, NOT_APPLICABLE
        return exact, v, EQUALITY if v == exact else VIOLATION
    if not coprime:
        return exact, None, NOT_APPLICABLE
    # Conj1
    c = bounds.conjecture1_bound(s, n)
    return exact, c, HOLDS if exact >= c else VIOLATION


def evaluate_case(theorem: str, case: dict) -> list[dict]:
    """Evaluate one case; T4 expands into one record per applicable part."""
    if theorem == "T1":
        exact, claim, verdict = _eval_t1(case)
        shown = dict(case)
        shown["terms"] = list(case["terms"])
        return [_record(theorem, shown, exact, claim, verdict)]
    if theorem in ("T2", "T3", "Conj1"):
        exact, claim, verdict = _eval_ap(theorem, case)
        return [_record(theorem, case, exact, claim, verdict)]
    if theorem == "T4":
        u0, r, n = case["u0"], case["r"], case["n"]
        if gcd(u0, r) != 1:
            return [_record(theorem, {**case, "part": "hypotheses"}, None, None, NOT_APPLICABLE)]
        out = []
        for rep in bounds.t4_bounds(ArithmeticProgression(u0, r), n):
            verdict = HOLDS if rep.holds else VIOLATION
            out.append(_record(theorem, {**case, "part": rep.bound_name}, rep.exact_lcm, rep.bound_value, verdict))
        return out
    if theorem == "T6":
        ((d, ratio),) = bounds.t5_t6_ratio_scan("T6", [case["delta"]])
        guard = 2.0**-40
        ok = (1 / math.pi) * (1 - guard) <= ratio <= 1.5 * (1 + guard)
        return [_record(theorem, case, 3 * d + 2, ratio, HOLDS if ok else VIOLATION)]
    if theorem == "T7":
        a, t, b, m, n = case["a"], case["t"], case["b"], case["m"], case["n"]
        if gcd(a, b) != 1:
            return [_record(theorem, case, None, None, NOT_APPLICABLE)]
        s = QuadraticSequence(a, t, b)
        try:
            w = window(s, m, n)
        except ZeroTerm:
            return [_record(theorem, case, None, None, NOT_APPLICABLE)]
        exact = lcm_window(w)
        d = bounds.t7_divisor(s, m, n)
        return [_record(theorem, case, exact, d, HOLDS if is_integer_multiple(exact, d) else VIOLATION)]
    if theorem == "C1":
        a, t, b, n = case["a"], case["t"], case["b"], case["n"]
        if gcd(a, b) != 1:
            return [_record(theorem, case, None, None, NOT_APPLICABLE)]
        s = QuadraticSequence(a, t, b)
        try:
            w = window(s, 0, n)
        except ZeroTerm:
            return [_record(theorem, case, None, None, NOT_APPLICABLE)]
        exact = lcm_window(w)
        c = bounds.c1_bound(s, n)
        return [_record(theorem, case, exact, c, HOLDS if exact >= c else VIOLATION)]
    if theorem in ("T8", "T9"):
        n, k = case["n"], case["k"]
        exact = consecutive.lcm_consecutive(n, k)
        if theorem == "T8":
            claim = consecutive.t8_divisor(n, k)
            fired = consecutive.t8_equality(n, k)
            divides = exact % claim == 0
        else:
            claim = consecutive.t9_multiple(n, k)
            fired = consecutive.t9_equality(n, k)
            divides = claim % exact == 0
        if not divides or (fired is not None and fired != exact):
            verdict = VIOLATION
        elif fired is not None:
            verdict = EQUALITY
        else:
            verdict = HOLDS
        return [_record(theorem, case, exact, claim, verdict)]
    if theorem == "GK":
        k, n = case["k"], case["n"]
        direct = consecutive.gk_direct(n, k)
        ok = factorial(k) % direct == 0
        if k >= 1:
            prev = consecutive.gk_direct(n, k - 1)
            ok = ok and consecutive.gk_recurrence(n, k, prev) == direct
            ok = ok and consecutive.gk_closed_form(n, k) == direct
        exact = consecutive.lcm_consecutive(n, k)
        return [_record(theorem, case, exact, direct, HOLDS if ok else VIOLATION)]
    if theorem == "N2P1":
        r, n = case["r"], case["n"]
        if n < r:
            return [_record(theorem, case, None, None, NOT_APPLICABLE)]
        exact = bounds.lcm_squares_plus_one(n)
        nb = bounds.n2plus1_bound(n, r)
        return [_record(theorem, case, exact, nb.exact, HOLDS if exact >= nb.exact else VIOLATION)]
    if theorem == "IDENTITIES":
        n, check, x = case["n"], case["check"], case["x"]
        if check == "identity8":
            ok = identities.identity8_check(n, x)
            claim = n * x * (x + 1) ** (n - 1)
        elif check == "identity9":
            ok = identities.identity9_check(n, x)
            claim = Fraction(n, 2) * x * ((x + 1) ** (n - 1) + (x - 1) ** (n - 1))
        else:
            ok = identities.central_binomial_estimate_check(n)
            claim = binomial(2 * n + 1, n)
        return [_record(theorem, case, None, claim, HOLDS if ok else VIOLATION)]
    raise ValueError(f"unknown theorem {theorem!r}")


def _evaluate_star(args: tuple) -> list[dict]:
    return evaluate_case(*args)


def run_scan(theorem: str, ranges: dict | None = None, jobs: int = 1):
    """Run a full scan; yields records in deterministic case order.

    Returns (record iterator, summary Counter filled as records are drawn).
    The worker count never changes the record stream: cases are distributed
    with an order-preserving map and merged back in input order.
    """
    cases = generate_cases(theorem, ranges)
    summary: Counter = Counter()

    def stream():
        if jobs <= 1:
            batches = (evaluate_case(theorem, c) for c in cases)
            for batch in batches:
                for rec in batch:
                    summary[rec["verdict"]] += 1
                    yield rec
        else:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                chunk = max(1, len(cases) // (jobs * 8))
                args = [(theorem, c) for c in cases]
                for batch in ex.map(_evaluate_star, args, chunksize=chunk):
                    for rec in batch:
                        summary[rec["verdict"]] += 1
                        yield rec

    return stream(), summary


def classic_rows(nmax: int):
    """lcm(1..n) against the 2^n / 3^n envelope for n = 1..nmax.

    The lower bound is only claimed for n >= 7; smaller n where lcm < 2^n
    get the "expected-below-threshold" verdict instead of a violation.
    """
    if nmax < 1:
        raise ValueError(f"requires nmax >= 1, got {nmax}")
    rows = []
    running = 1
    for n in range(1, nmax + 1):
        running = math.lcm(running, n)
        lower, upper = 2**n, 3**n
        if running > upper or (n >= 7 and running < lower):
            verdict = VIOLATION
        elif running < lower:
            verdict = "expected-below-threshold"
        else:
            verdict = HOLDS
        rows.append({"n": n, "lcm": running, "lower": lower, "upper": upper, "verdict": verdict})
    return rows


def classic_below_regions(rows) -> str:
    """Compact "1-4,6"-style rendering of the below-threshold n regions."""
    below = [row["n"] for row in rows if row["verdict"] == "expected-below-threshold"]
    spans = []
    for n in below:
        if spans and spans[-1][1] == n - 1:
            spans[-1][1] = n
        else:
            spans.append([n, n])
    return ",".join(str(a) if a == b else f"{a}-{b}" for a, b in spans)
