"""Permutations in one-line notation, descent statistics, and class streams.

Positions and values are both 1-based: ``Permutation((3, 1, 2))`` sends 1 to 3,
2 to 1 and 3 to 2.  The empty permutation (n = 0) is a valid object; it has no
descents and is the base case for the insertion operators in
:mod:`permgrid.grid`.

The text form used everywhere for emission is comma-separated values
("3,1,6,5,2,4"); the compact digit form ("316524") is accepted on input when
n <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _lex_words
from math import factorial
from typing import Iterator

KINDS = ("all", "involutions", "ffi")


def inverse_word(word: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of a one-line word: entry v of the result is the position of v.

    >>> inverse_word((2, 6, 4, 1, 3, 5))
    (4, 1, 5, 3, 6, 2)
    """
    inv = [0] * len(word)
    for pos, value in enumerate(word, start=1):
        inv[value - 1] = pos
    return tuple(inv)


def descent_number(word: tuple[int, ...]) -> int:
    """Number of positions i with word[i] > word[i+1]."""
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def idescent_number(word: tuple[int, ...]) -> int:
    """Descent count of the inverse word."""
    return descent_number(inverse_word(word))


@dataclass(frozen=True, order=True)
class DescentProfile:
    """Descent and inverse-descent counts of one permutation."""

    des: int
    ides: int

    def swapped(self) -> DescentProfile:
        return DescentProfile(des=self.ides, ides=self.des)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1, ..., n} stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"not a one-line permutation word: {self.word!r}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse "3,1,6,5,2,4", or the compact digit form "316524" for n <= 9.

        >>> Permutation.parse("316524") == Permutation.parse("3,1,6,5,2,4")
        True
        """
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(part) for part in text.split(",")))
        if not text.isdigit():
            raise ValueError(f"cannot parse a permutation from {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)

    def __call__(self, i: int) -> int:
        """Value at 1-based position i."""
        if not 1 <= i <= len(self.word):
            raise ValueError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    @property
    def n(self) -> int:
        return len(self.word)

    def inverse(self) -> Permutation:
        """
        >>> str(Permutation.parse("264135").inverse())
        '4,1,5,3,6,2'
        """
        return Permutation(inverse_word(self.word))

    def descents(self) -> tuple[int, ...]:
        """1-based positions i < n where the word steps down."""
        w = self.word
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

    @property
    def des(self) -> int:
        return descent_number(self.word)

    @property
    def ides(self) -> int:
        return idescent_number(self.word)

    def descent_profile(self) -> DescentProfile:
        """
        >>> Permutation.parse("264135").descent_profile()
        DescentProfile(des=2, ides=3)
        """
        return DescentProfile(descent_number(self.word), idescent_number(self.word))

    def is_involution(self) -> bool:
        return self.word == inverse_word(self.word)

    def is_fixed_point_free_involution(self) -> bool:
        if any(v == i for i, v in enumerate(self.word, start=1)):
            return False
        return self.is_involution()


def _involution_words(n: int, allow_fixed: bool) -> Iterator[tuple[int, ...]]:
    # Depth-first over the least free position, trying the fixed point first
    # and then partners in increasing order: this emits words in lex order.
    word = [0] * (n + 1)

    def fill(free: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(word[1:])
            return
        i = free[0]
        rest = free[1:]
        if allow_fixed:
            word[i] = i
            yield from fill(rest)
        for pos, j in enumerate(rest):
            word[i], word[j] = j, i
            yield from fill(rest[:pos] + rest[pos + 1 :])

    yield from fill(tuple(range(1, n + 1)))


def iter_words(kind: str, n: int) -> Iterator[tuple[int, ...]]:
    """One-line words of the requested class, in lexicographic order.

    Kinds: "all" (the full symmetric group), "involutions", "ffi"
    (fixed-point-free involutions; empty stream for odd n).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if kind == "all":
        yield from _lex_words(range(1, n + 1))
    elif kind == "involutions":
        yield from _involution_words(n, allow_fixed=True)
    elif kind == "ffi":
        if n % 2 == 0:
            yield from _involution_words(n, allow_fixed=False)
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def iter_kind(kind: str, n: int) -> Iterator[Permutation]:
    for w in iter_words(kind, n):
        yield Permutation(w)


def iter_permutations(n: int) -> Iterator[Permutation]:
    return iter_kind("all", n)


def iter_involutions(n: int) -> Iterator[Permutation]:
    return iter_kind("involutions", n)


def iter_fixed_point_free_involutions(n: int) -> Iterator[Permutation]:
    return iter_kind("ffi", n)


def class_size(kind: str, n: int) -> int:
    """Exact class cardinality, computed by recurrence instead of streaming.

    >>> [class_size("involutions", n) for n in range(6)]
    [1, 1, 2, 4, 10, 26]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if kind == "all":
        return factorial(n)
    if kind == "involutions":
        sizes = [1, 1]
        for m in range(2, n + 1):
            sizes.append(sizes[m - 1] + (m - 1) * sizes[m - 2])
        return sizes[n]
    if kind == "ffi":
        if n % 2 == 1:
            return 0
        total = 1
        for odd in range(1, n, 2):
            total *= odd
        return total
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
