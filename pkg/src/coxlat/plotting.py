"""Matplotlib figures for CLI reports: Hasse diagrams and timing charts."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .lattice import Lattice  # noqa: E402


def _layout(L: Lattice):
    by_rank: dict[int, list[int]] = {}
    for i in range(L.n):
        by_rank.setdefault(L.rank[i], []).append(i)
    pos = {}
    # order each layer by the mean position of lower covers to cut crossings
    for r in sorted(by_rank):
        layer = by_rank[r]
        if r > 0:
            layer.sort(key=lambda i: sum(pos[x][0] for x, _ in L.down[i]) / max(1, len(L.down[i])))
        w = len(layer)
        for k, i in enumerate(layer):
            pos[i] = (k - (w - 1) / 2, r)
    return pos


def hasse_figure(L: Lattice, path, title: str = "", classes=None, labels: bool | None = None):
    """Draw the Hasse diagram; contracted edges of ``classes`` are drawn in red."""
    pos = _layout(L)
    width = max(len([i for i in range(L.n) if L.rank[i] == r]) for r in set(L.rank))
    fig, ax = plt.subplots(figsize=(min(2 + 0.9 * width, 48), min(2 + 0.8 * max(L.rank), 40)))
    for i, j, _ in L.covers():
        contracted = classes is not None and classes[i] == classes[j]
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="tab:red" if contracted else "0.6",
                lw=2.0 if contracted else 0.7, zorder=1)
    xs = [pos[i][0] for i in range(L.n)]
    ys = [pos[i][1] for i in range(L.n)]
    ax.scatter(xs, ys, s=18, color="black", zorder=2)
    if labels is None:
        labels = L.n <= 60
    if labels:
        for i in range(L.n):
            ax.annotate(L.names[i], pos[i], fontsize=7, xytext=(3, 3), textcoords="offset points")
    ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def timing_figure(rows, path, title: str = "case timings"):
    """Horizontal bar chart of (case id, seconds, passed) triples."""
    names = [r[0] for r in rows]
    secs = [r[1] for r in rows]
    colours = ["tab:green" if r[2] else "tab:red" for r in rows]
    fig, ax = plt.subplots(figsize=(7, 0.3 * len(rows) + 1.2))
    ax.barh(range(len(rows)), secs, color=colours)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
