"""Boundary-to-boundary grid paths and the path view of delta types.

Horizontal paths run from the left boundary to the right one, walking east
along a grid line and jumping diagonally across each filled square they meet:
kind-0 paths jump southeast, kind-1 paths jump northeast.  Vertical paths run
top to bottom with southeast (kind 0) or southwest (kind 1) jumps.  A diagonal
jump contributes both of its endpoint grid points to the path; the crossing
inside the square is not a grid point.

Every grid point lies on exactly one horizontal and exactly one vertical path,
and the pair of kinds at a point equals its insertion delta type.  Tracing
works purely by the local walking rule; it never performs an insertion, which
is what makes the cross-check against :func:`permgrid.grid.dtype`
non-circular.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InvariantError
from .grid import DType, GridPoint
from .perm import Permutation, inverse_word

PATH_KINDS = ("H0", "H1", "V0", "V1")


class Path(NamedTuple):
    kind: str
    points: tuple[GridPoint, ...]


def path_json_obj(path: Path) -> dict:
    return {"kind": path.kind, "points": [[p.row, p.col] for p in path.points]}


@dataclass(frozen=True)
class PathSet:
    """All four kinds of paths for one permutation, plus point lookups."""

    n: int
    h0: tuple[Path, ...]
    h1: tuple[Path, ...]
    v0: tuple[Path, ...]
    v1: tuple[Path, ...]
    _h_kind: dict[GridPoint, int] = field(repr=False, compare=False)
    _v_kind: dict[GridPoint, int] = field(repr=False, compare=False)

    def counts(self) -> tuple[int, int, int, int]:
        return (len(self.h0), len(self.h1), len(self.v0), len(self.v1))

    def by_kind(self, kind: str) -> tuple[Path, ...]:
        try:
            return {"H0": self.h0, "H1": self.h1, "V0": self.v0, "V1": self.v1}[kind]
        except KeyError:
            raise ValueError(f"unknown path kind {kind!r}") from None

    def all_paths(self) -> tuple[Path, ...]:
        return self.h0 + self.h1 + self.v0 + self.v1

    def dtype_at(self, point: tuple[int, int]) -> DType:
        pt = GridPoint(*point)
        if not (1 <= pt.row <= self.n + 1 and 1 <= pt.col <= self.n + 1):
            raise ValueError(f"grid point {pt} outside [1, {self.n + 1}]^2")
        try:
            return DType(self._h_kind[pt], self._v_kind[pt])
        except KeyError:
            raise InvariantError(f"grid point {pt} lies on no traced path") from None


def _walk_h(word: tuple[int, ...], start_row: int, kind: int) -> tuple[GridPoint, ...]:
    n = len(word)
    r, c = start_row, 1
    points = [GridPoint(r, c)]
    while c <= n:
        if kind == 0 and r <= n and word[r - 1] == c:
            r, c = r + 1, c + 1  # southeast across the filled square <r, c>
        elif kind == 1 and r >= 2 and word[r - 2] == c:
            r, c = r - 1, c + 1  # northeast across the filled square <r-1, c>
        else:
            c += 1
        points.append(GridPoint(r, c))
    return tuple(points)


def _walk_v(word: tuple[int, ...], start_col: int, kind: int) -> tuple[GridPoint, ...]:
    n = len(word)
    r, c = 1, start_col
    points = [GridPoint(r, c)]
    while r <= n:
        if kind == 0 and c <= n and word[r - 1] == c:
            r, c = r + 1, c + 1  # southeast across <r, c>
        elif kind == 1 and c >= 2 and word[r - 1] == c - 1:
            r, c = r + 1, c - 1  # southwest across <r, c-1>
        else:
            r += 1
        points.append(GridPoint(r, c))
    return tuple(points)


def _register(points: Iterable[GridPoint], kind: int, seen: dict[GridPoint, int]) -> None:
    for pt in points:
        if pt in seen:
            raise InvariantError(f"grid point {pt} lies on two paths of one orientation")
        seen[pt] = kind


def trace_paths(pi: Permutation) -> PathSet:
    """Trace every path of every kind; paths are ordered by starting boundary
    point (top to bottom for horizontal, left to right for vertical).

    The kind of each path is fixed by its start: the top-left corner starts a
    kind-0 horizontal path, the bottom-left corner a kind-1 one, and the point
    (r, 1) between them continues a kind-0 path exactly when the word steps
    down from row r-1 to row r.  Columns behave the same with the inverse word.
    """
    word = pi.word
    n = len(word)
    if n < 1:
        raise ValueError("paths need n >= 1")
    inv = inverse_word(word)

    h0: list[Path] = []
    h1: list[Path] = []
    h_kind: dict[GridPoint, int] = {}
    for r in range(1, n + 2):
        if r == 1:
            kind = 0
        elif r == n + 1:
            kind = 1
        else:
            kind = 0 if word[r - 2] > word[r - 1] else 1
        path = Path(f"H{kind}", _walk_h(word, r, kind))
        _register(path.points, kind, h_kind)
        (h0 if kind == 0 else h1).append(path)

    v0: list[Path] = []
    v1: list[Path] = []
    v_kind: dict[GridPoint, int] = {}
    for c in range(1, n + 2):
        if c == 1:
            kind = 0
        elif c == n + 1:
            kind = 1
        else:
            kind = 0 if inv[c - 2] > inv[c - 1] else 1
        path = Path(f"V{kind}", _walk_v(word, c, kind))
        _register(path.points, kind, v_kind)
        (v0 if kind == 0 else v1).append(path)

    total = (n + 1) * (n + 1)
    if len(h_kind) != total or len(v_kind) != total:
        raise InvariantError("traced paths do not cover every grid point")

    return PathSet(n, tuple(h0), tuple(h1), tuple(v0), tuple(v1), h_kind, v_kind)


def dtype_via_paths(pi: Permutation, point: tuple[int, int]) -> DType:
    """Delta type read off from path kinds, with no insertion performed."""
    return trace_paths(pi).dtype_at(point)
