"""Matplotlib renderings of Betti tables and verification reports (PNG files)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .betti import BettiTable  # noqa: E402


def plot_betti(table: BettiTable, path, title: str = "") -> Path:
    """Heatmap of graded Betti numbers: rows h, columns total degree."""
    graded = table.graded()
    hs = sorted({h for h, _ in graded}) or [1]
    degs = sorted({d for _, d in graded}) or [0]
    grid = np.zeros((len(hs), len(degs)), dtype=int)
    for (h, d), c in graded.items():
        grid[hs.index(h), degs.index(d)] = c
    fig, ax = plt.subplots(figsize=(1.2 + 0.7 * len(degs), 1.0 + 0.6 * len(hs)))
    ax.imshow(grid, cmap="Blues", aspect="auto")
    for a in range(len(hs)):
        for b in range(len(degs)):
            if grid[a, b]:
                ax.text(b, a, str(grid[a, b]), ha="center", va="center", fontsize=9)
    ax.set_xticks(range(len(degs)), [str(d) for d in degs])
    ax.set_yticks(range(len(hs)), [str(h) for h in hs])
    ax.set_xlabel("total degree")
    ax.set_ylabel("h")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_verification(doc: dict, path) -> Path:
    """Bar chart of checked inputs per theorem, failures stacked in red."""
    names = sorted(doc["theorems"])
    checked = [doc["theorems"][t]["checked"] for t in names]
    failed = [len(doc["theorems"][t]["failures"]) for t in names]
    ok = [c - f for c, f in zip(checked, failed)]
    fig, ax = plt.subplots(figsize=(1.5 + len(names), 3))
    ax.bar(names, ok, color="tab:green", label="pass")
    ax.bar(names, failed, bottom=ok, color="tab:red", label="fail")
    ax.set_ylabel("inputs checked")
    ax.set_title(f"verification: {doc['corpus']}", fontsize=10)
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path
