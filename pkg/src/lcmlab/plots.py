"""Figure rendering for the CLI report paths.

Each function writes one matplotlib figure next to the delimited output.
Magnitudes are plotted on a log10 scale computed from the exact integers,
so even lcm values far beyond float range render correctly.
"""

from __future__ import annotations

import math
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .consecutive import GkTable

__all__ = [
    "save_gk_figure",
    "save_classic_figure",
    "save_ratio_figure",
    "save_n2plus1_figure",
]


def _log10(x) -> float:
    if isinstance(x, Fraction):
        return math.log10(x.numerator) - math.log10(x.denominator)
    return math.log10(x)


def save_gk_figure(table: GkTable, path: str) -> None:
    """Step plot of g_k over one full period, with the smallest period marked."""
    fig, ax = plt.subplots(figsize=(9, 4))
    ns = range(1, len(table.values) + 1)
    ax.step(ns, table.values, where="mid", lw=1.0)
    if 1 < table.smallest_period < len(table.values):
        ax.axvline(table.smallest_period + 0.5, color="crimson", ls="--", lw=1,
                   label=f"smallest period = {table.smallest_period}")
        ax.legend()
    ax.set_xlabel("n")
    ax.set_ylabel(f"g_{table.k}(n)")
    ax.set_title(f"quotient map g_{table.k} over one period of length {len(table.values)}"
                 f" (smallest period {table.smallest_period})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_classic_figure(rows, path: str) -> None:
    """lcm(1..n) between the 2^n and 3^n envelopes, log10 scale."""
    ns = [row["n"] for row in rows]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(ns, [_log10(row["lcm"]) for row in rows], label="log10 lcm(1..n)", lw=1.5)
    ax.plot(ns, [row["n"] * math.log10(2) for row in rows], "--", label="log10 2^n", lw=1)
    ax.plot(ns, [row["n"] * math.log10(3) for row in rows], "--", label="log10 3^n", lw=1)
    ax.set_xlabel("n")
    ax.set_ylabel("log10")
    ax.set_title("lcm(1..n) against the exponential envelope")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_ratio_figure(points, path: str) -> None:
    """Optimality ratio against delta, with the 1/pi and 3/2 rails."""
    deltas = [d for d, _ in points]
    ratios = [ratio for _, ratio in points]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.semilogx(deltas, ratios, lw=1.2)
    ax.axhline(1 / math.pi, color="gray", ls=":", lw=1, label="1/pi")
    ax.axhline(1.5, color="crimson", ls="--", lw=1, label="3/2 limit")
    ax.set_xlabel("delta")
    ax.set_ylabel("ratio")
    ax.set_title("best-constant witness ratio along u0 = 3d+2, r = 2d+1")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_n2plus1_figure(series, path: str) -> None:
    """lcm{1^2+1..n^2+1} against the stride-r lower bounds, log10 scale.

    series: list of (r, [(n, exact_lcm, bound)]) groups.
    """
    fig, ax = plt.subplots(figsize=(8, 4.5))
    drew_lcm = False
    for r, rows in series:
        if not rows:
            continue
        if not drew_lcm:
            ax.plot([n for n, _, _ in rows], [_log10(v) for _, v, _ in rows],
                    color="black", lw=1.5, label="log10 lcm{k^2+1}")
            drew_lcm = True
        ax.plot([n for n, _, _ in rows], [_log10(b) for _, _, b in rows],
                "--", lw=1, label=f"bound, stride r={r}")
    ax.set_xlabel("n")
    ax.set_ylabel("log10")
    ax.set_title("lcm of k^2+1 terms against subsequence lower bounds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
