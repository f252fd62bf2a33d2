"""Named verification checks over exhaustively enumerated small cases.

Each check streams every object of the relevant class up to a size bound and
asserts an exact property; failures are collected (the enumeration order is
lexicographic and sizes increase, so the first recorded failure is a minimal
counterexample).  Checks return a machine-readable result; nothing raises on a
mere property failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import bijections, tables
from .bijections import psi_A, psi_I, psi_J, theta_A, theta_I, theta_J
from .grid import GridPoint, census_counts, dtype, dtype_census
from .paths import trace_paths
from .perm import Permutation, descent_number, idescent_number, iter_kind, iter_words

_MAX_FAILURES = 5

DEFAULT_N_MAX = {
    "recA": 8,
    "recI": 10,
    "recJ": 12,
    "census": 7,
    "paths": 7,
    "bijection-A": 7,
    "bijection-I": 10,
    "bijection-J": 12,
    "gf-I": 6,
    "gf-J": 6,
    "unimodal": 14,
}

CHECK_NAMES = tuple(DEFAULT_N_MAX)


@dataclass
class CheckResult:
    name: str
    n_max: int
    passed: bool
    checked: int
    elapsed_s: float
    failures: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "check": self.name,
            "n_max": self.n_max,
            "passed": self.passed,
            "checked": self.checked,
            "elapsed_s": round(self.elapsed_s, 3),
            "failures": self.failures,
        }

    def summary_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (
            f"{self.name}: {status} ({self.checked} assertions, "
            f"{self.elapsed_s:.2f}s, n_max={self.n_max})"
        )
        if self.failures:
            head += "\n" + "\n".join(f"  counterexample: {f}" for f in self.failures)
        return head


class _Collector:
    def __init__(self) -> None:
        self.checked = 0
        self.failures: list[str] = []

    def expect(self, ok: bool, describe) -> None:
        self.checked += 1
        if not ok and len(self.failures) < _MAX_FAILURES:
            self.failures.append(describe() if callable(describe) else describe)


def _check_census(n_max: int, col: _Collector) -> None:
    for n in range(1, n_max + 1):
        for w in iter_words("all", n):
            pi = Permutation(w)
            found = dtype_census(pi)
            predicted = census_counts(n, descent_number(w), idescent_number(w))
            col.expect(
                found == predicted,
                lambda pi=pi, f=found, p=predicted: f"census({pi}) = {f}, predicted {p}",
            )
            col.expect(
                sum(found.values()) == (n + 1) ** 2,
                lambda pi=pi: f"census({pi}) does not sum to (n+1)^2",
            )


def _check_paths(n_max: int, col: _Collector) -> None:
    for n in range(1, n_max + 1):
        total = (n + 1) * (n + 1)
        for w in iter_words("all", n):
            pi = Permutation(w)
            ps = trace_paths(pi)  # raises InvariantError if coverage breaks
            des, ides = descent_number(w), idescent_number(w)
            col.expect(
                ps.counts() == (des + 1, n - des, ides + 1, n - ides),
                lambda pi=pi, ps=ps: f"path counts of {pi} are {ps.counts()}",
            )
            h_points = sum(len(p.points) for p in ps.h0 + ps.h1)
            v_points = sum(len(p.points) for p in ps.v0 + ps.v1)
            col.expect(
                h_points == total and v_points == total,
                lambda pi=pi: f"paths of {pi} revisit a grid point",
            )


def _check_path_dtype_agreement(n_max: int, col: _Collector) -> None:
    for n in range(1, n_max + 1):
        for w in iter_words("all", n):
            pi = Permutation(w)
            ps = trace_paths(pi)
            for r in range(1, n + 2):
                for c in range(1, n + 2):
                    col.expect(
                        ps.dtype_at((r, c)) == dtype(pi, (r, c)),
                        lambda pi=pi, r=r, c=c: f"path/insertion delta mismatch at ({r},{c}) of {pi}",
                    )


def _check_recurrence(kind: str, n_max: int, col: _Collector) -> None:
    report = tables.verify_recurrence(kind, n_max)
    col.checked += report["entries_checked"]
    for line in report["mismatches"][:_MAX_FAILURES]:
        col.failures.append(line)


def _check_bijection_A(n_max: int, col: _Collector) -> None:
    for n in range(2, n_max + 1):
        seen: dict = {}
        buckets: dict = {}
        for pi in iter_kind("all", n):
            for k in range(1, n + 1):
                sigma, pt = theta_A(pi, k)
                col.expect(
                    psi_A(sigma, pt) == (pi, k),
                    lambda pi=pi, k=k: f"psi_A(theta_A({pi}, {k})) is not the identity",
                )
                key = (sigma.word, pt)
                col.expect(
                    key not in seen,
                    lambda key=key: f"theta_A image collision at {key}",
                )
                seen[key] = (pi, k)
                bucket = (sigma.des, sigma.ides, dtype(sigma, pt))
                buckets[bucket] = buckets.get(bucket, 0) + 1
        smaller = tables.brute_table("A", n - 1).values
        for (i, j), count in smaller.items():
            predicted = census_counts(n - 1, i - 1, j - 1)
            for d in predicted:
                col.expect(
                    buckets.get((i - 1, j - 1, d), 0) == predicted[d] * count,
                    lambda i=i, j=j, d=d: f"image class (des={i - 1}, ides={j - 1}, {tuple(d)}) "
                    f"has wrong cardinality at n={n}",
                )
        for sigma in iter_kind("all", n - 1):
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    pi, k = psi_A(sigma, (r, c))
                    col.expect(
                        theta_A(pi, k) == (sigma, GridPoint(r, c)),
                        lambda sigma=sigma, r=r, c=c: f"theta_A(psi_A({sigma}, ({r},{c}))) "
                        "is not the identity",
                    )


# Descent shift applied by the psi branch of each family.
_B_SHIFT = {"B1": 0, "B2": 1, "B3": 0, "B4": 1, "B5": 2}
_D_SHIFT = {"D1": 0, "D2": 1, "D3": 1, "D4": 2, "D5": 2}


def _five_term_expectations(n: int, k: int, prev1: dict, prev2: dict) -> dict[str, int]:
    def one(kk: int) -> int:
        return prev1.get(kk, 0) if kk >= 0 else 0

    def two(kk: int) -> int:
        return prev2.get(kk, 0) if kk >= 0 else 0

    return {
        "B1": (k + 1) * one(k),
        "B2": (n - k) * one(k - 1),
        "B3": ((k + 1) ** 2 + n - 2) * two(k),
        "B4": (2 * k * (n - k - 1) - n + 3) * two(k - 1),
        "B5": ((n - k) ** 2 + n - 2) * two(k - 2),
    }


def _check_bijection_I(n_max: int, col: _Collector) -> None:
    for n in range(3, n_max + 1):
        forward: dict = {}
        family_counts: dict = {}
        per_k_total: dict[int, int] = {}
        for pi in iter_kind("involutions", n):
            k = pi.des
            for i in range(1, n + 1):
                trace = theta_I(pi, i)
                el = trace.element
                col.expect(
                    psi_I(el) == (pi, i),
                    lambda pi=pi, i=i: f"psi_I(theta_I({pi}, {i})) is not the identity",
                )
                key = (el.sigma.word, el.point, el.family, el.tag)
                col.expect(key not in forward, lambda key=key: f"theta_I collision at {key}")
                forward[key] = (pi, i)
                family_counts[(k, el.family)] = family_counts.get((k, el.family), 0) + 1
                per_k_total[k] = per_k_total.get(k, 0) + 1
        i_table = tables.brute_table("I", n).values
        prev1 = dict(tables.brute_table("I", n - 1).values)
        prev2 = dict(tables.brute_table("I", n - 2).values) if n >= 3 else {0: 1}
        for k, count in i_table.items():
            if count == 0:
                continue
            expected = _five_term_expectations(n, k, prev1, prev2)
            for family, want in expected.items():
                got = family_counts.get((k, family), 0)
                col.expect(
                    got == want,
                    lambda n=n, k=k, family=family, got=got, want=want: (
                        f"I-image family {family} at (n,k)=({n},{k}) has {got} elements, "
                        f"expected {want}"
                    ),
                )
            col.expect(
                per_k_total.get(k, 0) == n * count,
                lambda n=n, k=k: f"I-image total at (n,k)=({n},{k}) is wrong",
            )
        # Reverse direction: every constructible element round-trips into the
        # table cell its family prescribes.
        streams = [
            (n - 1, bijections._b_elements_single),
            (n - 2, bijections._b_elements_double),
        ]
        for size, elements_of in streams:
            for sigma in iter_kind("involutions", size):
                for el in elements_of(sigma):
                    pi, i = psi_I(el)
                    target_k = sigma.des + _B_SHIFT[el.family]
                    col.expect(
                        pi.n == n and pi.des == target_k,
                        lambda el=el, pi=pi: f"psi_I({el}) landed at the wrong table cell ({pi})",
                    )
                    col.expect(
                        theta_I(pi, i).element == el,
                        lambda el=el: f"theta_I(psi_I({el})) is not the identity",
                    )


def _d_term_expectations(n: int, k: int, prev: dict) -> dict[str, int]:
    def at(kk: int) -> int:
        return prev.get(kk, 0) if kk >= 0 else 0

    first = (k * (k + 1) + n - 2) * at(k)
    second = 2 * ((k - 1) * (n - k - 1) + 1) * at(k - 1)
    third = ((n - k) * (n - k + 1) + n - 2) * at(k - 2)
    return {"D1": first, "D2+D3": second, "D4+D5": third}


def _check_bijection_J(n_max: int, col: _Collector) -> None:
    for n in range(4, n_max + 1, 2):
        forward: dict = {}
        family_counts: dict = {}
        per_k_total: dict[int, int] = {}
        for pi in iter_kind("ffi", n):
            k = pi.des
            for i in range(1, n + 1):
                trace = theta_J(pi, i)
                el = trace.element
                col.expect(
                    psi_J(el) == (pi, i),
                    lambda pi=pi, i=i: f"psi_J(theta_J({pi}, {i})) is not the identity",
                )
                key = (el.sigma.word, el.point, el.family, el.tag)
                col.expect(key not in forward, lambda key=key: f"theta_J collision at {key}")
                forward[key] = (pi, i)
                family_counts[(k, el.family)] = family_counts.get((k, el.family), 0) + 1
                per_k_total[k] = per_k_total.get(k, 0) + 1
        j_table = tables.brute_table("J", n).values
        prev = {0: 1} if n == 2 else dict(tables.brute_table("J", n - 2).values)
        for k, count in j_table.items():
            if count == 0:
                continue
            expected = _d_term_expectations(n, k, prev)
            grouped = {
                "D1": family_counts.get((k, "D1"), 0),
                "D2+D3": family_counts.get((k, "D2"), 0) + family_counts.get((k, "D3"), 0),
                "D4+D5": family_counts.get((k, "D4"), 0) + family_counts.get((k, "D5"), 0),
            }
            for group, want in expected.items():
                col.expect(
                    grouped[group] == want,
                    lambda n=n, k=k, group=group, got=grouped[group], want=want: (
                        f"J-image group {group} at (n,k)=({n},{k}) has {got} elements, "
                        f"expected {want}"
                    ),
                )
            col.expect(
                per_k_total.get(k, 0) == n * count,
                lambda n=n, k=k: f"J-image total at (n,k)=({n},{k}) is wrong",
            )
        for sigma in iter_kind("ffi", n - 2):
            for el in bijections._d_elements(sigma):
                pi, i = psi_J(el)
                target_k = sigma.des + _D_SHIFT[el.family]
                col.expect(
                    pi.n == n and pi.des == target_k,
                    lambda el=el, pi=pi: f"psi_J({el}) landed at the wrong table cell ({pi})",
                )
                col.expect(
                    theta_J(pi, i).element == el,
                    lambda el=el: f"theta_J(psi_J({el})) is not the identity",
                )


def _check_gf(kind: str, u_order: int, margin: int, col: _Collector) -> None:
    report = tables.gf_check(kind, u_order, margin=margin)
    col.checked += report["coefficients_checked"]
    col.failures.extend(report["mismatches"][:_MAX_FAILURES])


def _check_unimodal(n_max: int, col: _Collector, cap_involutions: int = 12, cap_ffi: int = 14) -> None:
    # The two classes grow at very different rates, so each kind is clamped
    # to its own streaming cap.
    for n in range(1, min(n_max, cap_involutions) + 1):
        seq = tables.brute_table("I", n).sequence()
        col.expect(
            tables.is_unimodal(seq),
            lambda n=n, seq=seq: f"I sequence at n={n} is not unimodal: {seq}",
        )
    for n in range(2, min(n_max, cap_ffi) + 1, 2):
        seq = tables.brute_table("J", n).sequence()
        col.expect(
            tables.is_unimodal(seq),
            lambda n=n, seq=seq: f"J sequence at n={n} is not unimodal: {seq}",
        )


def run_check(name: str, n_max: int | None = None, gf_margin: int = 0) -> CheckResult:
    """Run one named check; ``n_max`` falls back to the check's default.

    For the generating-function checks ``n_max`` is the u-order of the
    truncation window and ``gf_margin`` widens the t-order.
    """
    if name not in DEFAULT_N_MAX:
        raise ValueError(f"unknown check {name!r}; expected one of {CHECK_NAMES}")
    bound = DEFAULT_N_MAX[name] if n_max is None else n_max
    col = _Collector()
    start = time.perf_counter()
    if name == "census":
        _check_census(bound, col)
    elif name == "paths":
        _check_paths(bound, col)
        _check_path_dtype_agreement(min(bound, 6), col)
    elif name == "recA":
        _check_recurrence("A", bound, col)
    elif name == "recI":
        _check_recurrence("I", bound, col)
    elif name == "recJ":
        _check_recurrence("J", bound, col)
    elif name == "bijection-A":
        _check_bijection_A(bound, col)
    elif name == "bijection-I":
        _check_bijection_I(bound, col)
    elif name == "bijection-J":
        _check_bijection_J(bound, col)
    elif name == "gf-I":
        _check_gf("I", bound, gf_margin, col)
    elif name == "gf-J":
        _check_gf("J", bound, gf_margin, col)
    elif name == "unimodal":
        _check_unimodal(bound, col)
    elapsed = time.perf_counter() - start
    return CheckResult(
        name=name,
        n_max=bound,
        passed=not col.failures,
        checked=col.checked,
        elapsed_s=elapsed,
        failures=col.failures,
    )
