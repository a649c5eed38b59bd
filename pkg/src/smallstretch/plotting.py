"""Figure rendering for the report path: growth of the coprime-gap
function, 1/g decay of the entropy bounds, and girth margins of the
shift-graph grid.  Files only, headless backend, no interactive state.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bounds import BoundRecord
from .digraphs import GirthCheck


def save_jacobsthal_fit_figure(table: Sequence[int], constant: float,
                               path: str) -> None:
    """Scatter of j(n)/ln(n)^2 for 3 <= n < len(table), with the fitted
    constant as a horizontal reference line."""
    ns = range(3, len(table))
    ratios = [table[n] / math.log(n) ** 2 for n in ns]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.scatter(list(ns), ratios, s=4, color="tab:blue", label="j(n) / ln(n)^2")
    ax.axhline(constant, color="tab:red", linewidth=1,
               label=f"fitted constant {constant:.6f}")
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("ratio")
    ax.set_title("coprime-gap growth against ln(n)^2")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bound_decay_figure(records: Iterable[BoundRecord], path: str) -> None:
    """Log-log decay of lower/upper entropy bounds against genus,
    one curve pair per puncture count."""
    by_n: dict[int, list[BoundRecord]] = {}
    for rec in records:
        by_n.setdefault(rec.n, []).append(rec)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for n, recs in sorted(by_n.items()):
        recs.sort(key=lambda r: r.g)
        gs = [r.g for r in recs]
        ax.plot(gs, [r.lower for r in recs], linestyle="--",
                label=f"n={n} lower")
        uppers = [(r.g, r.upper) for r in recs if r.upper is not None]
        if uppers:
            ax.plot([g for g, _ in uppers], [u for _, u in uppers],
                    label=f"n={n} upper")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("genus g")
    ax.set_ylabel("bound on log(stretch factor)")
    ax.set_title("entropy bounds vs genus")
    ax.legend(loc="lower left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_girth_margin_figure(checks: Iterable[GirthCheck], path: str) -> None:
    """Shift-graph girth against the nk/7 threshold over the grid."""
    rows = sorted(checks, key=lambda c: (c.n * c.k, c.n))
    sizes = [c.n * c.k for c in rows]
    girths = [c.girth for c in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.scatter(sizes, girths, s=10, color="tab:green", label="girth")
    span = sorted(set(sizes))
    ax.plot(span, [s / 7.0 for s in span], color="tab:red", linewidth=1,
            label="threshold nk/7")
    ax.set_xlabel("vertex count nk")
    ax.set_ylabel("shortest cycle length")
    ax.set_title("shift-graph girth margins")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
