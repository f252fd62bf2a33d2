"""Exact descent tables by brute force, by recurrence, and by bijective
generation, plus the marginal, symmetry, unimodality and generating-function
cross-checks.

Table kinds:

* ``A``: joint (descent, inverse-descent) counts over the symmetric group,
  indexed by (i, j) = (des + 1, ides + 1);
* ``I``: descent counts over involutions, indexed by k = des;
* ``J``: descent counts over fixed-point-free involutions (even sizes only).

All entries are exact Python integers; the three construction methods must
agree entrywise, which the verification harness checks exhaustively.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import islice
from typing import Iterator, Mapping

from .bijections import _b_elements_double, _b_elements_single, _d_elements, psi_I, psi_J
from .errors import InvariantError
from .grid import insert_word
from .perm import (
    class_size,
    descent_number,
    inverse_word,
    iter_fixed_point_free_involutions,
    iter_involutions,
    iter_words,
)
from .series import TruncatedSeries

KIND_TO_CLASS = {"A": "all", "I": "involutions", "J": "ffi"}
METHODS = ("brute", "recurrence", "bijective")

_CHUNK = 40_000


@dataclass(frozen=True)
class StatTable:
    """One exact table; A values are keyed (i, j), I/J values are keyed k."""

    kind: str
    n: int
    method: str
    values: Mapping

    def total(self) -> int:
        return sum(self.values.values())

    def sequence(self) -> list[int]:
        """Entries of an I/J table as the list [value at k] for k = 0..n-1."""
        if self.kind == "A":
            raise ValueError("sequence() applies to I/J tables")
        return [self.values.get(k, 0) for k in range(self.n)]

    def entries(self) -> list[tuple]:
        """Rows [index..., value] in deterministic index order."""
        if self.kind == "A":
            return [
                (i, j, self.values.get((i, j), 0))
                for i in range(1, self.n + 1)
                for j in range(1, self.n + 1)
            ]
        return [(k, self.values.get(k, 0)) for k in range(self.n)]

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "method": self.method,
            "entries": [[*idx, str(value)] for *idx, value in self.entries()],
        }

    def to_csv_text(self) -> str:
        header = "i,j,value" if self.kind == "A" else "k,value"
        lines = [header]
        lines.extend(",".join(str(part) for part in row) for row in self.entries())
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Brute force (optionally sharded over worker processes)
# ---------------------------------------------------------------------------


def _profile_chunk(words: list[tuple[int, ...]]) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for w in words:
        key = (descent_number(w), descent_number(inverse_word(w)))
        counts[key] = counts.get(key, 0) + 1
    return counts


def _descent_chunk(words: list[tuple[int, ...]]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in words:
        k = descent_number(w)
        counts[k] = counts.get(k, 0) + 1
    return counts


def _chunks(stream: Iterator[tuple[int, ...]], size: int) -> Iterator[list[tuple[int, ...]]]:
    while True:
        block = list(islice(stream, size))
        if not block:
            return
        yield block


def _tally(kind: str, n: int, workers: int) -> dict:
    stream = iter_words(KIND_TO_CLASS[kind], n)
    counter = _profile_chunk if kind == "A" else _descent_chunk
    if workers <= 1:
        return counter(list(stream))
    merged: dict = {}
    # Order-independent merge: integer addition commutes, so any chunk
    # completion order yields the same table.
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(counter, _chunks(stream, _CHUNK)):
            for key, value in partial.items():
                merged[key] = merged.get(key, 0) + value
    return merged


def brute_table(kind: str, n: int, workers: int = 1) -> StatTable:
    """Count the class directly; the reference for every other method."""
    _check_kind_n(kind, n)
    raw = _tally(kind, n, workers)
    if kind == "A":
        values = {(d + 1, i + 1): c for (d, i), c in raw.items()}
    else:
        values = {k: raw.get(k, 0) for k in range(n)}
    return StatTable(kind, n, "brute", values)


def _check_kind_n(kind: str, n: int) -> None:
    if kind not in KIND_TO_CLASS:
        raise ValueError(f"unknown table kind {kind!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "J" and n % 2 == 1:
        raise ValueError("J tables need an even size")


# ---------------------------------------------------------------------------
# Recurrences (exact, with divisibility asserted before every division)
# ---------------------------------------------------------------------------


def _exact_div(value: int, divisor: int, context: str) -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise InvariantError(f"{context}: {value} is not divisible by {divisor}")
    return quotient


def _rhs_A(prev: Mapping, n: int, i: int, j: int) -> int:
    def at(a: int, b: int) -> int:
        return prev.get((a, b), 0)

    return (
        (i * j + n - 1) * at(i, j)
        + (1 - n + j * (n + 1 - i)) * at(i - 1, j)
        + (1 - n + i * (n + 1 - j)) * at(i, j - 1)
        + (n - 1 + (n + 1 - i) * (n + 1 - j)) * at(i - 1, j - 1)
    )


def _rhs_I(prev1: Mapping, prev2: Mapping, n: int, k: int) -> int:
    def one(m: int) -> int:
        return prev1.get(m, 0) if m >= 0 else 0

    def two(m: int) -> int:
        return prev2.get(m, 0) if m >= 0 else 0

    return (
        (k + 1) * one(k)
        + (n - k) * one(k - 1)
        + ((k + 1) ** 2 + n - 2) * two(k)
        + (2 * k * (n - k - 1) - n + 3) * two(k - 1)
        + ((n - k) ** 2 + n - 2) * two(k - 2)
    )


def _rhs_J(prev: Mapping, n: int, k: int) -> int:
    def at(m: int) -> int:
        return prev.get(m, 0) if m >= 0 else 0

    return (
        (k * (k + 1) + n - 2) * at(k)
        + 2 * ((k - 1) * (n - k - 1) + 1) * at(k - 1)
        + ((n - k) * (n - k + 1) + n - 2) * at(k - 2)
    )


def recurrence_table(kind: str, n: int) -> StatTable:
    """Evaluate the linear recurrence exactly from the printed base cases."""
    _check_kind_n(kind, n)
    if kind == "A":
        current: dict = {(1, 1): 1}
        for m in range(2, n + 1):
            previous, current = current, {}
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    value = _exact_div(_rhs_A(previous, m, i, j), m, f"A recurrence at n={m}")
                    if value:
                        current[(i, j)] = value
        return StatTable("A", n, "recurrence", current)
    if kind == "I":
        tables = {1: {0: 1}, 2: {0: 1, 1: 1}}
        for m in range(3, n + 1):
            tables[m] = {
                k: _exact_div(
                    _rhs_I(tables[m - 1], tables[m - 2], m, k), m, f"I recurrence at n={m}"
                )
                for k in range(m)
            }
        return StatTable("I", n, "recurrence", dict(tables[n]))
    tables = {2: {0: 0, 1: 1}}
    for m in range(4, n + 1, 2):
        tables[m] = {
            k: _exact_div(_rhs_J(tables[m - 2], m, k), m, f"J recurrence at n={m}")
            for k in range(m)
        }
    return StatTable("J", n, "recurrence", dict(tables[n]))


# ---------------------------------------------------------------------------
# Bijective generation: build size-n objects from smaller ones and count
# ---------------------------------------------------------------------------


def bijective_table(kind: str, n: int) -> StatTable:
    """Generate each size-n object once per marked position through the
    constructive maps, then divide the tallies by the position count."""
    _check_kind_n(kind, n)
    if kind == "A":
        if n == 1:
            return StatTable("A", 1, "bijective", {(1, 1): 1})
        tallies: dict[tuple[int, int], int] = {}
        for w in iter_words("all", n - 1):
            inv = inverse_word(w)
            for row in range(1, n + 1):
                for col in range(1, n + 1):
                    key = (
                        descent_number(insert_word(w, row, col)) + 1,
                        descent_number(insert_word(inv, col, row)) + 1,
                    )
                    tallies[key] = tallies.get(key, 0) + 1
        values = {
            key: _exact_div(count, n, f"bijective A at n={n}") for key, count in tallies.items()
        }
        return StatTable("A", n, "bijective", values)

    if kind == "I":
        if n <= 2:
            # below the smallest size the transfer maps reach; counted directly
            return StatTable("I", n, "bijective", dict(brute_table("I", n).values))
        tallies = {}
        for sigma in iter_involutions(n - 1):
            for element in _b_elements_single(sigma):
                bigger, _ = psi_I(element)
                tallies[bigger.des] = tallies.get(bigger.des, 0) + 1
        for sigma in iter_involutions(n - 2):
            for element in _b_elements_double(sigma):
                bigger, _ = psi_I(element)
                tallies[bigger.des] = tallies.get(bigger.des, 0) + 1
        values = {
            k: _exact_div(tallies.get(k, 0), n, f"bijective I at n={n}") for k in range(n)
        }
        return StatTable("I", n, "bijective", values)

    if n == 2:
        return StatTable("J", 2, "bijective", {0: 0, 1: 1})
    tallies = {}
    for sigma in iter_fixed_point_free_involutions(n - 2):
        for element in _d_elements(sigma):
            bigger, _ = psi_J(element)
            tallies[bigger.des] = tallies.get(bigger.des, 0) + 1
    values = {k: _exact_div(tallies.get(k, 0), n, f"bijective J at n={n}") for k in range(n)}
    return StatTable("J", n, "bijective", values)


def table(kind: str, n: int, method: str = "brute", workers: int = 1) -> StatTable:
    if method == "brute":
        return brute_table(kind, n, workers=workers)
    if method == "recurrence":
        return recurrence_table(kind, n)
    if method == "bijective":
        return bijective_table(kind, n)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------


def verify_recurrence(kind: str, n_max: int) -> dict:
    """Check n * table_n(brute) against the recurrence right-hand side built
    from brute-force tables of smaller sizes, entrywise."""
    if kind not in KIND_TO_CLASS:
        raise ValueError(f"unknown table kind {kind!r}")
    rows = []
    mismatches: list[str] = []
    checked = 0
    if kind == "A":
        brutes = {m: brute_table("A", m).values for m in range(1, n_max + 1)}
        for m in range(2, n_max + 1):
            bad = []
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    checked += 1
                    lhs = m * brutes[m].get((i, j), 0)
                    rhs = _rhs_A(brutes[m - 1], m, i, j)
                    if lhs != rhs:
                        bad.append(f"A n={m} (i,j)=({i},{j}): {lhs} != {rhs}")
            rows.append({"n": m, "ok": not bad})
            mismatches.extend(bad)
    elif kind == "I":
        brutes = {m: brute_table("I", m).values for m in range(1, n_max + 1)}
        for m in range(3, n_max + 1):
            bad = []
            for k in range(m):
                checked += 1
                lhs = m * brutes[m].get(k, 0)
                rhs = _rhs_I(brutes[m - 1], brutes[m - 2], m, k)
                if lhs != rhs:
                    bad.append(f"I n={m} k={k}: {lhs} != {rhs}")
            rows.append({"n": m, "ok": not bad})
            mismatches.extend(bad)
    else:
        brutes = {m: brute_table("J", m).values for m in range(2, n_max + 1, 2)}
        for m in range(4, n_max + 1, 2):
            bad = []
            for k in range(m):
                checked += 1
                lhs = m * brutes[m].get(k, 0)
                rhs = _rhs_J(brutes[m - 2], m, k)
                if lhs != rhs:
                    bad.append(f"J n={m} k={k}: {lhs} != {rhs}")
            rows.append({"n": m, "ok": not bad})
            mismatches.extend(bad)
    return {
        "kind": kind,
        "n_max": n_max,
        "entries_checked": checked,
        "rows": rows,
        "mismatches": mismatches,
        "passed": not mismatches,
    }


@lru_cache(maxsize=None)
def eulerian_number(n: int, m: int) -> int:
    """Permutations of size n with m descents, by the classical recurrence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0 or m > n - 1:
        return 0
    if n == 1:
        return 1
    return (m + 1) * eulerian_number(n - 1, m) + (n - m) * eulerian_number(n - 1, m - 1)


def eulerian_marginal(n: int) -> dict:
    """Row sums of the A table against independently computed single-statistic
    counts."""
    values = brute_table("A", n).values
    rows = []
    mismatches = []
    for i in range(1, n + 1):
        marginal = sum(values.get((i, j), 0) for j in range(1, n + 1))
        expected = eulerian_number(n, i - 1)
        rows.append({"i": i, "marginal": marginal, "eulerian": expected})
        if marginal != expected:
            mismatches.append(f"n={n} i={i}: {marginal} != {expected}")
    return {"n": n, "rows": rows, "mismatches": mismatches, "passed": not mismatches}


def descent_polynomial(kind: str, n: int) -> list[int]:
    """Coefficient list of the descent polynomial of the class (index k).

    Size 0 contributes the constant polynomial 1; an odd-size "ffi" class is
    empty, giving the zero polynomial.
    """
    if n == 0:
        return [1]
    counts: dict[int, int] = {}
    for w in iter_words(KIND_TO_CLASS[kind], n):
        k = descent_number(w)
        counts[k] = counts.get(k, 0) + 1
    return [counts.get(k, 0) for k in range(max(counts, default=0) + 1)]


def gf_check(kind: str, u_order: int, margin: int = 0) -> dict:
    """Compare the two sides of the class generating-function identity,
    coefficientwise, inside the truncation window.

    The left side sums brute-force descent polynomials weighted by
    u^n / (1-t)^(n+1); the right side is the closed sum whose r-th term
    carries t^r exactly, so truncating the sum at r = t_order loses nothing
    inside the window.
    """
    if kind not in ("I", "J"):
        raise ValueError("generating-function check applies to kinds I and J")
    if u_order < 0:
        raise ValueError("u_order must be >= 0")
    t_order = u_order + margin
    if t_order < 0:
        raise ValueError(
            f"truncation margin {margin} empties the comparison window "
            f"(t order {t_order} < 0)"
        )

    inv_one_minus_t = TruncatedSeries(
        u_order, t_order, {(0, 0): Fraction(1), (0, 1): Fraction(-1)}
    ).reciprocal()
    lhs = TruncatedSeries.zero(u_order, t_order)
    for n in range(u_order + 1):
        poly = descent_polynomial(kind, n)
        if not any(poly):
            continue
        term = TruncatedSeries.from_t_coefficients(poly, u_order, t_order)
        term = term * TruncatedSeries.monomial(u_order, t_order, du=n)
        term = term * inv_one_minus_t ** (n + 1)
        lhs = lhs + term

    inv_one_minus_u = TruncatedSeries(
        u_order, t_order, {(0, 0): Fraction(1), (1, 0): Fraction(-1)}
    ).reciprocal()
    inv_one_minus_u2 = TruncatedSeries(
        u_order, t_order, {(0, 0): Fraction(1), (2, 0): Fraction(-1)}
    ).reciprocal()
    rhs = TruncatedSeries.zero(u_order, t_order)
    for r in range(t_order + 1):
        term = TruncatedSeries.monomial(u_order, t_order, dt=r)
        if kind == "I":
            term = term * inv_one_minus_u ** (r + 1)
        term = term * inv_one_minus_u2 ** (r * (r + 1) // 2)
        rhs = rhs + term

    mismatches = []
    for du in range(u_order + 1):
        for dt in range(t_order + 1):
            left, right = lhs.coefficient(du, dt), rhs.coefficient(du, dt)
            if left != right:
                mismatches.append(f"u^{du} t^{dt}: {left} != {right}")
    return {
        "kind": kind,
        "u_order": u_order,
        "t_order": t_order,
        "coefficients_checked": (u_order + 1) * (t_order + 1),
        "mismatches": mismatches,
        "passed": not mismatches,
    }


# ---------------------------------------------------------------------------
# Shape predicates
# ---------------------------------------------------------------------------


def is_unimodal(sequence) -> bool:
    """True when the sequence rises (weakly) and then falls (weakly).

    >>> is_unimodal((1, 4, 4, 1)), is_unimodal((1, 0, 1))
    (True, False)
    """
    values = list(sequence)
    if not values:
        raise ValueError("empty sequence")
    falling = False
    for a, b in zip(values, values[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            return False
    return True


def is_log_concave(sequence) -> bool:
    """True when every interior term satisfies a_i^2 >= a_{i-1} * a_{i+1}."""
    values = list(sequence)
    if not values:
        raise ValueError("empty sequence")
    return all(
        values[i] ** 2 >= values[i - 1] * values[i + 1] for i in range(1, len(values) - 1)
    )


def class_total(kind: str, n: int) -> int:
    """Expected table mass: n!, the involution numbers, or (n-1)!!."""
    return class_size(KIND_TO_CLASS[kind], n)
