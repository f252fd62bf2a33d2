"""Acceptance suite: one test per criterion, exact integer equalities.

Each test prints through the terminal-summary hook in conftest.py, one
PASS/FAIL line per criterion.  The two stated wall-clock bounds (the census
example under a millisecond, the joint-table recurrence and bijection sweeps
under a minute) are asserted; the remaining criteria are unbounded sweeps.
"""

import json
import time
from pathlib import Path

from permgrid import (
    DType,
    Permutation,
    class_size,
    delete,
    dtype,
    dtype_census,
    census_counts,
    eta,
    eta_inv,
    eta_prime,
    eta_prime_inv,
    eulerian_marginal,
    gf_check,
    insert,
    is_unimodal,
    iter_kind,
    iter_words,
    table,
    trace_paths,
    xi,
    xi_inv,
)
from permgrid.perm import descent_number, idescent_number
from permgrid.tables import brute_table
from permgrid.verify import run_check


def test_criterion_01_census_example_fast():
    pi = Permutation.parse("316524")
    expected = {DType(0, 0): 22, DType(1, 0): 6, DType(0, 1): 6, DType(1, 1): 15}
    assert dtype_census(pi) == expected
    timings = []
    for _ in range(10):
        t0 = time.perf_counter()
        dtype_census(pi)
        timings.append(time.perf_counter() - t0)
    best = min(timings)
    assert best < 1e-3, f"census took {best * 1e3:.3f} ms"


def test_criterion_02_census_formulas_exhaustive():
    for n in range(1, 8):
        for w in iter_words("all", n):
            pi = Permutation(w)
            census = dtype_census(pi)
            assert census == census_counts(n, descent_number(w), idescent_number(w))
            assert sum(census.values()) == (n + 1) ** 2


def test_criterion_03_path_counts_exhaustive():
    for n in range(1, 8):
        total = (n + 1) ** 2
        for w in iter_words("all", n):
            pi = Permutation(w)
            ps = trace_paths(pi)  # tracing validates the point partition
            des, ides = descent_number(w), idescent_number(w)
            assert ps.counts() == (des + 1, n - des, ides + 1, n - ides)
            assert sum(len(p.points) for p in ps.h0 + ps.h1) == total
            assert sum(len(p.points) for p in ps.v0 + ps.v1) == total


def test_criterion_04_path_dtype_agreement():
    for n in range(1, 7):
        for w in iter_words("all", n):
            pi = Permutation(w)
            ps = trace_paths(pi)
            for r in range(1, n + 2):
                for c in range(1, n + 2):
                    assert ps.dtype_at((r, c)) == dtype(pi, (r, c))


def test_criterion_05_A_recurrence_to_8():
    start = time.perf_counter()
    report = run_check("recA", 8)
    assert report.passed, report.failures
    for n in range(1, 9):
        assert table("A", n, "recurrence").values == brute_table("A", n).values
    assert time.perf_counter() - start < 60


def test_criterion_06_A_bijection_to_7():
    start = time.perf_counter()
    report = run_check("bijection-A", 7)
    assert report.passed, report.failures
    assert time.perf_counter() - start < 60


def test_criterion_07_I_recurrence_and_bijection_to_10(golden_dir: Path):
    assert class_size("involutions", 10) == 9496
    assert sum(1 for _ in iter_words("involutions", 10)) == 9496
    assert run_check("recI", 10).passed
    report = run_check("bijection-I", 10)
    assert report.passed, report.failures
    golden = json.loads((golden_dir / "theta_I_42315.json").read_text())
    from permgrid import theta_I

    pi = Permutation.parse("42315")
    rows = [theta_I(pi, i).to_json_obj() for i in range(1, 6)]
    assert rows == golden
    assert len(rows) == 5


def test_criterion_08_J_recurrence_and_bijection_to_12(golden_dir: Path):
    assert run_check("recJ", 12).passed
    report = run_check("bijection-J", 12)
    assert report.passed, report.failures
    golden = json.loads((golden_dir / "theta_J_532614.json").read_text())
    from permgrid import theta_J

    pi = Permutation.parse("532614")
    rows = [theta_J(pi, i).to_json_obj() for i in range(1, 7)]
    assert rows == golden
    erratum_row = rows[2]
    assert erratum_row["output_perm"] == "3,4,1,2"
    assert erratum_row["point"] == [2, 2] and erratum_row["tag"] == 2


def test_criterion_09_generating_function_identities():
    for kind in ("I", "J"):
        report = gf_check(kind, 6)
        assert report["passed"], report["mismatches"][:3]


def test_criterion_10_marginals_and_symmetry_to_8():
    for n in range(1, 9):
        assert eulerian_marginal(n)["passed"]
        values = brute_table("A", n).values
        assert all(values.get((j, i), 0) == v for (i, j), v in values.items())


def test_criterion_11_unimodality():
    for n in range(1, 13):
        assert is_unimodal(brute_table("I", n).sequence())
    for n in range(2, 15, 2):
        assert is_unimodal(brute_table("J", n).sequence())


def test_criterion_12_round_trip_operator_suite():
    for n in range(0, 7):
        for w in iter_words("all", n):
            pi = Permutation(w)
            for r in range(1, n + 2):
                for c in range(1, n + 2):
                    assert delete(insert(pi, (r, c)), (r, c)) == pi
    for n in range(0, 9):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 2):
                for j in range(1, n + 2):
                    if i != j:
                        assert xi_inv(xi(pi, (i, j)), (i, j)) == pi
                assert eta_inv(eta(pi, i), i) == pi
                assert eta_prime_inv(eta_prime(pi, i), i) == pi
