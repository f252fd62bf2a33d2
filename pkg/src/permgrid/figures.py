"""Matplotlib figures for the table report path.

Figures are written next to the delimited table output: a heatmap for the
joint A tables, a bar chart for the single-statistic I/J tables.
"""

from __future__ import annotations

from pathlib import Path

from .tables import StatTable


def save_table_figure(tbl: StatTable, path: str | Path) -> Path:
    """Render one table to an image file; the format follows the extension."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    target = Path(path)
    fig, ax = plt.subplots(figsize=(6, 5))
    if tbl.kind == "A":
        n = tbl.n
        data = [[tbl.values.get((i, j), 0) for j in range(1, n + 1)] for i in range(1, n + 1)]
        image = ax.imshow(data, cmap="viridis", origin="upper")
        ax.set_xticks(range(n), [str(j) for j in range(1, n + 1)])
        ax.set_yticks(range(n), [str(i) for i in range(1, n + 1)])
        ax.set_xlabel("inverse-descent index j")
        ax.set_ylabel("descent index i")
        ax.set_title(f"Joint descent table, n = {n}")
        fig.colorbar(image, ax=ax, shrink=0.8)
        if n <= 8:
            top = max(max(row) for row in data)
            for i in range(n):
                for j in range(n):
                    color = "white" if data[i][j] < top / 2 else "black"
                    ax.text(j, i, str(data[i][j]), ha="center", va="center",
                            color=color, fontsize=8)
    else:
        seq = tbl.sequence()
        ax.bar(range(len(seq)), seq, color="#4878a8")
        ax.set_xticks(range(len(seq)))
        ax.set_xlabel("descent count k")
        ax.set_ylabel("count")
        label = "involutions" if tbl.kind == "I" else "fixed-point-free involutions"
        ax.set_title(f"Descents over {label}, n = {tbl.n}")
    fig.tight_layout()
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target
