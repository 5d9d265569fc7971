"""Report figures, rendered headless to PNG files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def weight_histogram(distribution: dict[int, int], path, *, bound: int | None = None, title: str = "") -> Path:
    """Bar chart of codeword counts per nonzero weight, log scale, with the claimed bound as a line."""
    path = Path(path)
    ws = sorted(w for w in distribution if w > 0)
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(ws, [distribution[w] for w in ws], width=0.8, color="tab:blue")
    ax.set_yscale("log")
    if bound is not None:
        ax.axvline(bound, color="tab:red", linestyle="--", label=f"claimed d >= {bound}")
        ax.legend(loc="upper left")
    ax.set_xlabel("weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def bound_comparison(rows, path) -> Path:
    """Claimed lower bound against observed minimum weight, one group per code.

    ``rows`` holds (label, claimed, observed) triples.
    """
    path = Path(path)
    labels = [r[0] for r in rows]
    xs = range(len(rows))
    fig, ax = plt.subplots(figsize=(max(4, 2 * len(rows)), 3.5))
    ax.bar([x - 0.2 for x in xs], [r[1] for r in rows], width=0.4, label="claimed d lower bound", color="tab:gray")
    ax.bar([x + 0.2 for x in xs], [r[2] for r in rows], width=0.4, label="observed min weight", color="tab:green")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
