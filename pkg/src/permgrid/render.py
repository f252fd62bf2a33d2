"""ASCII and SVG renderings of permutation grids.

Both layouts follow the grid convention used throughout the package: row 1 at
the top, column 1 at the left, filled squares shaded, with optional delta-type
digits on the grid points and optional path overlays (horizontal paths in one
color, vertical in another, marked points circled).  These renderings are
documentation aids and are never parsed back.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .grid import DType, GridPoint, dtype
from .paths import Path, PathSet
from .perm import Permutation

DEFAULT_COLORS = {
    "fill": "#d9d9d9",
    "line": "#444444",
    "h_path": "#d62728",
    "v_path": "#1f77b4",
    "marker": "#ffdf00",
}


def _dtype_map(pi: Permutation) -> dict[GridPoint, DType]:
    return {
        GridPoint(r, c): dtype(pi, (r, c))
        for r in range(1, pi.n + 2)
        for c in range(1, pi.n + 2)
    }


def _crossings(paths: Iterable[Path]) -> dict[tuple[int, int], str]:
    """Map square (row, col) -> diagonal character for each jump of a path."""
    marks: dict[tuple[int, int], str] = {}
    for path in paths:
        for a, b in zip(path.points, path.points[1:]):
            if a.row == b.row or a.col == b.col:
                continue
            square = (min(a.row, b.row), min(a.col, b.col))
            glyph = "\\" if path.kind in ("H0", "V0") else "/"
            previous = marks.get(square)
            marks[square] = glyph if previous in (None, glyph) else "X"
    return marks


def ascii_grid(
    pi: Permutation,
    dtype_overlay: bool = False,
    paths: Sequence[Path] = (),
) -> str:
    """Fixed-pitch rendering; filled squares are '#', path jumps appear as
    diagonal characters inside the squares they cross."""
    n = pi.n
    marks = _crossings(paths)
    deltas = _dtype_map(pi) if dtype_overlay else {}
    lines = []
    for r in range(1, n + 2):
        tokens = []
        for c in range(1, n + 2):
            if dtype_overlay:
                d = deltas[GridPoint(r, c)]
                point = f"{d.p}{d.q}"
            else:
                point = "+-" if c <= n else "+"
            tokens.append(point + ("--" if c <= n else ""))
        lines.append("".join(tokens))
        if r <= n:
            cells = []
            for c in range(1, n + 1):
                body = "#" if pi.word[r - 1] == c else " "
                jump = marks.get((r, c), " ")
                cells.append(f"|{jump}{body} ")
            lines.append("".join(cells) + "|")
    return "\n".join(lines) + "\n"


def svg_grid(
    pi: Permutation,
    paths: Sequence[Path] = (),
    dtype_overlay: bool = False,
    marks: Sequence[tuple[int, int]] = (),
    colors: dict[str, str] | None = None,
    cell: int = 30,
) -> str:
    """Standalone SVG document for one grid, with optional overlays."""
    palette = dict(DEFAULT_COLORS)
    if colors:
        palette.update(colors)
    n = pi.n
    margin = cell // 2
    size = n * cell + 2 * margin

    def x(col: int) -> int:
        return margin + (col - 1) * cell

    def y(row: int) -> int:
        return margin + (row - 1) * cell

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for row, col in enumerate(pi.word, start=1):
        out.append(
            f'<rect x="{x(col)}" y="{y(row)}" width="{cell}" height="{cell}" '
            f'fill="{palette["fill"]}"/>'
        )
    for k in range(1, n + 2):
        out.append(
            f'<line x1="{x(1)}" y1="{y(k)}" x2="{x(n + 1)}" y2="{y(k)}" '
            f'stroke="{palette["line"]}" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{x(k)}" y1="{y(1)}" x2="{x(k)}" y2="{y(n + 1)}" '
            f'stroke="{palette["line"]}" stroke-width="1"/>'
        )
    for path in paths:
        color = palette["h_path"] if path.kind.startswith("H") else palette["v_path"]
        pts = " ".join(f"{x(p.col)},{y(p.row)}" for p in path.points)
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="3" stroke-opacity="0.85"/>'
        )
    for row, col in marks:
        out.append(
            f'<circle cx="{x(col)}" cy="{y(row)}" r="{cell * 0.18:.1f}" '
            f'fill="{palette["marker"]}" stroke="black" stroke-width="1"/>'
        )
    if dtype_overlay:
        for pt, d in _dtype_map(pi).items():
            out.append(
                f'<text x="{x(pt.col) + 2}" y="{y(pt.row) - 2}" '
                f'font-size="{cell // 3}" font-family="monospace">{d.p}{d.q}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def select_paths(path_set: PathSet, selection: Sequence[str]) -> tuple[Path, ...]:
    """Resolve a path-kind selection ("all" or any of h0/h1/v0/v1)."""
    wanted: list[Path] = []
    for name in selection:
        key = name.upper()
        if key == "ALL":
            return path_set.all_paths()
        wanted.extend(path_set.by_kind(key))
    return tuple(wanted)
