"""Render an HFK rank table as an (A, delta) grid image."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .homology import HfkTable  # noqa: E402


def plot_hfk(table: HfkTable, path: str | Path, title: str = "") -> Path:
    """Write a PNG/PDF/SVG (by suffix) with one labelled dot per nonzero rank."""
    rows = table.rows()
    xs = [a for a, _, _ in rows]
    ys = [d for _, d, _ in rows]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * (max(xs) - min(xs) + 3)), 3.2))
    ax.scatter(xs, ys, s=[60 + 40 * r for _, _, r in rows], color="#2b5d8a", zorder=2)
    for a, d, r in rows:
        if r > 1:
            ax.annotate(str(r), (a, d), xytext=(0, 8), textcoords="offset points",
                        ha="center", fontsize=8)
    ax.set_xlabel("Alexander grading A")
    ax.set_ylabel("relative delta grading")
    ax.set_xticks(range(min(xs), max(xs) + 1))
    ax.set_yticks(range(min(ys), max(ys) + 1))
    ax.set_ylim(min(ys) - 1, max(ys) + 1)
    ax.grid(True, color="#dddddd", zorder=0)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
