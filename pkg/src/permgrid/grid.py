"""Permutation grids: square insertion/deletion and per-point delta types.

The grid of a size-n permutation has n x n unit cells; the cell in row i (top
to bottom) and column pi(i) (left to right) is filled.  Grid points are the
(n+1) x (n+1) lattice crossings, indexed (row, col) from the top-left crossing
(1, 1).  Inserting a filled square at a grid point yields a permutation one
size larger while preserving the relative order of the existing squares; the
resulting change to the pair (descents, inverse descents) is the point's delta
type, always one of (0,0), (1,0), (0,1), (1,1).
"""

from __future__ import annotations

from typing import NamedTuple

from .perm import Permutation, descent_number, inverse_word


class GridPoint(NamedTuple):
    row: int
    col: int


class Square(NamedTuple):
    row: int
    col: int


class DType(NamedTuple):
    """Change (p, q) of (descents, inverse descents) caused by an insertion."""

    p: int
    q: int


#: The four possible delta types, in fixed emission order.
DTYPES = (DType(0, 0), DType(1, 0), DType(0, 1), DType(1, 1))


def insert_word(word: tuple[int, ...], row: int, col: int) -> tuple[int, ...]:
    """One-line word of the insertion at grid point (row, col).

    The new row receives the value ``col``; other rows keep their values with
    everything >= col bumped by one, and rows at or below ``row`` shift down
    one place.

    >>> insert_word((3, 6, 1, 5, 4, 2), 3, 5)
    (3, 7, 5, 1, 6, 4, 2)
    """
    n = len(word)
    if not (1 <= row <= n + 1 and 1 <= col <= n + 1):
        raise ValueError(f"grid point ({row}, {col}) outside [1, {n + 1}]^2")
    bumped = tuple(v + 1 if v >= col else v for v in word)
    return bumped[: row - 1] + (col,) + bumped[row - 1 :]


def delete_word(word: tuple[int, ...], row: int, col: int) -> tuple[int, ...]:
    """Inverse of :func:`insert_word`; requires the square <row, col> filled."""
    n = len(word)
    if not (1 <= row <= n and word[row - 1] == col):
        raise ValueError(f"square <{row}, {col}> is not filled")
    rest = word[: row - 1] + word[row:]
    return tuple(v - 1 if v > col else v for v in rest)


def insert(pi: Permutation, point: tuple[int, int]) -> Permutation:
    """
    >>> str(insert(Permutation.parse("361542"), GridPoint(3, 5)))
    '3,7,5,1,6,4,2'
    """
    row, col = point
    return Permutation(insert_word(pi.word, row, col))


def delete(sigma: Permutation, square: tuple[int, int]) -> Permutation:
    """
    >>> str(delete(Permutation.parse("3751642"), Square(3, 5)))
    '3,6,1,5,4,2'
    """
    row, col = square
    return Permutation(delete_word(sigma.word, row, col))


def filled_squares(pi: Permutation) -> tuple[Square, ...]:
    return tuple(Square(i, v) for i, v in enumerate(pi.word, start=1))


def is_filled(pi: Permutation, square: tuple[int, int]) -> bool:
    row, col = square
    return 1 <= row <= pi.n and pi.word[row - 1] == col


def dtype(pi: Permutation, point: tuple[int, int]) -> DType:
    """Delta type of a grid point, computed by performing the insertion.

    Transposing the grid swaps the roles of the two statistics, so the second
    component is read off by inserting at the mirrored point of the inverse.
    """
    row, col = point
    word = pi.word
    inv = inverse_word(word)
    p = descent_number(insert_word(word, row, col)) - descent_number(word)
    q = descent_number(insert_word(inv, col, row)) - descent_number(inv)
    return DType(p, q)


def dtype_census(pi: Permutation) -> dict[DType, int]:
    """Count of each delta type over all (n+1)^2 grid points.

    >>> dtype_census(Permutation.parse("1"))
    {DType(p=0, q=0): 2, DType(p=1, q=0): 0, DType(p=0, q=1): 0, DType(p=1, q=1): 2}
    """
    word = pi.word
    n = len(word)
    if n < 1:
        raise ValueError("census needs n >= 1")
    inv = inverse_word(word)
    des0 = descent_number(word)
    ides0 = descent_number(inv)
    counts = {d: 0 for d in DTYPES}
    for row in range(1, n + 2):
        for col in range(1, n + 2):
            p = descent_number(insert_word(word, row, col)) - des0
            q = descent_number(insert_word(inv, col, row)) - ides0
            counts[DType(p, q)] += 1
    return counts


def census_counts(n: int, des: int, ides: int) -> dict[DType, int]:
    """Predicted census for any size-n permutation with the given statistics."""
    i, j = des + 1, ides + 1
    return {
        DType(0, 0): i * j + n,
        DType(1, 0): j * (n + 1 - i) - n,
        DType(0, 1): i * (n + 1 - j) - n,
        DType(1, 1): (n + 1 - i) * (n + 1 - j) + n,
    }
