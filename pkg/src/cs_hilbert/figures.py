"""Matplotlib rendering of the report picture.

The figure has two panels: the grid poset with the order ideal shaded and
the antichain marked, and the bipartite graph with one edge per order-ideal
element, antichain edges drawn bold.  Rendering targets files, so the Agg
backend is forced at import time.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .grid import Antichain, order_ideal


def render_report_figure(antichain: Antichain, path: str, antichain_only: bool = False) -> None:
    """Save the two-panel picture of an antichain to ``path``."""
    m, n = antichain.shape.m, antichain.shape.n
    ideal = order_ideal(antichain)
    marked = set(antichain.points)

    width = max(6.0, 0.6 * (m + n))
    fig, (ax_grid, ax_graph) = plt.subplots(
        1, 2, figsize=(width, max(3.0, 0.45 * max(m, n))), constrained_layout=True
    )

    cells = ideal.sorted_points()
    if cells:
        plain = [p for p in cells if p not in marked]
        if plain:
            ax_grid.scatter(
                [a for a, _ in plain], [b for _, b in plain],
                marker="s", s=90, color="#9ecae1", label="order ideal",
            )
        ax_grid.scatter(
            [a for a, _ in marked], [b for _, b in marked],
            marker="s", s=110, color="#08519c", label="antichain",
        )
        ax_grid.legend(loc="upper right", fontsize=8)
    ax_grid.set_xlim(0.5, m + 0.5)
    ax_grid.set_ylim(0.5, n + 0.5)
    ax_grid.set_xticks(range(1, m + 1))
    ax_grid.set_yticks(range(1, n + 1))
    ax_grid.set_xlabel("a")
    ax_grid.set_ylabel("b")
    ax_grid.set_title(f"order ideal in [{m}] x [{n}]")
    ax_grid.grid(True, linewidth=0.3, alpha=0.5)
    ax_grid.set_aspect("equal")

    if not antichain_only:
        for a, b in cells:
            if (a, b) not in marked:
                ax_graph.plot([a, b], [1, 0], color="0.65", linewidth=0.8, zorder=1)
    for a, b in antichain.points:
        ax_graph.plot([a, b], [1, 0], color="black", linewidth=2.4, zorder=2)
    ax_graph.scatter(range(1, m + 1), [1] * m, s=60, color="black", zorder=3)
    ax_graph.scatter(range(1, n + 1), [0] * n, s=60, color="black", zorder=3)
    for i in range(1, m + 1):
        ax_graph.annotate(f"x{i}", (i, 1), textcoords="offset points", xytext=(0, 8),
                          ha="center", fontsize=8)
    for j in range(1, n + 1):
        ax_graph.annotate(f"y{j}", (j, 0), textcoords="offset points", xytext=(0, -14),
                          ha="center", fontsize=8)
    ax_graph.set_xlim(0.4, max(m, n) + 0.6)
    ax_graph.set_ylim(-0.35, 1.35)
    ax_graph.set_title("bipartite graph")
    ax_graph.axis("off")

    fig.savefig(path, dpi=150)
    plt.close(fig)
