"""Figure rendering for the report path: whenever a sweep or table is
persisted, a companion PNG lands next to the delimited file."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sweeps import ConjectureRow, VerifyOutcome

FIGSIZE = (7.0, 4.2)
DPI = 150


def sweep_figure(outcome: VerifyOutcome, path: str | Path) -> Path:
    """Minimum energy-minus-order margin per order, with any flagged
    graphs marked."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    orders = [s.order for s in outcome.order_stats]
    margins = [s.min_margin for s in outcome.order_stats]
    ax.plot(orders, margins, "o-", color="tab:blue", lw=1.2, ms=4,
            label="min (E - n) per order")
    ax.axhline(0.0, color="black", lw=0.8, ls="--")
    if outcome.counterexamples:
        ax.scatter(
            [r.n for r in outcome.counterexamples],
            [r.deficit for r in outcome.counterexamples],
            marker="x", color="tab:red", s=60, zorder=5,
            label=f"below order ({len(outcome.counterexamples)})",
        )
    if outcome.borderline:
        ax.scatter(
            [r.n for r in outcome.borderline],
            [r.deficit for r in outcome.borderline],
            marker="s", color="tab:orange", s=40, zorder=5,
            label=f"borderline ({len(outcome.borderline)})",
        )
    ax.set_xlabel("order n")
    ax.set_ylabel("energy - order")
    ax.set_title(f"sweep {outcome.sweep}: {outcome.total} graphs")
    ax.grid(alpha=0.3)
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def conjecture_figure(rows: list[ConjectureRow], path: str | Path) -> Path:
    """Energy/order ratio of the hub-joined triple binary trees against
    the depth parameter."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.plot([r.k for r in rows], [r.ratio for r in rows], "o-",
            color="tab:green", lw=1.2)
    ax.axhline(1.0, color="black", lw=0.8, ls="--", label="ratio 1")
    for r in rows:
        ax.annotate(f"n={r.order}", (r.k, r.ratio), textcoords="offset points",
                    xytext=(0, 7), ha="center", fontsize=7)
    ax.set_xlabel("depth parameter k")
    ax.set_ylabel("energy / order")
    ax.set_title("hub-joined triple binary trees")
    ax.grid(alpha=0.3)
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path
