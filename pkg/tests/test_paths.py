import json

import pytest
from hypothesis import given, strategies as st

from permgrid import Permutation, dtype, dtype_via_paths, iter_kind, trace_paths
from permgrid.grid import GridPoint
from permgrid.paths import path_json_obj


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(tuple(range(1, n + 1))).map(
            lambda w: Permutation(tuple(w))
        )
    )


def test_counts_paper_example():
    assert trace_paths(Permutation.parse("316524")).counts() == (4, 3, 4, 3)


def test_counts_extremes():
    for n in range(1, 8):
        assert trace_paths(Permutation.identity(n)).counts() == (1, n, 1, n)
        decreasing = Permutation(tuple(range(n, 0, -1)))
        assert trace_paths(decreasing).counts() == (n, 1, n, 1)


@given(perms())
def test_counts_match_descent_profile(pi):
    profile = pi.descent_profile()
    assert trace_paths(pi).counts() == (
        profile.des + 1,
        pi.n - profile.des,
        profile.ides + 1,
        pi.n - profile.ides,
    )


def test_counts_exhaustive_at_8():
    # Smaller sizes are swept by the acceptance suite; this pins the next one.
    n = 8
    for pi in iter_kind("all", n):
        profile = pi.descent_profile()
        assert trace_paths(pi).counts() == (
            profile.des + 1,
            n - profile.des,
            profile.ides + 1,
            n - profile.ides,
        )


@given(perms(max_n=6))
def test_paths_partition_grid_points(pi):
    ps = trace_paths(pi)
    everything = {
        GridPoint(r, c) for r in range(1, pi.n + 2) for c in range(1, pi.n + 2)
    }
    h_seen = [p for path in ps.h0 + ps.h1 for p in path.points]
    v_seen = [p for path in ps.v0 + ps.v1 for p in path.points]
    assert len(h_seen) == len(everything) and set(h_seen) == everything
    assert len(v_seen) == len(everything) and set(v_seen) == everything


def test_path_endpoints_and_steps():
    for n in range(1, 7):
        for pi in iter_kind("all", n):
            ps = trace_paths(pi)
            for path in ps.h0 + ps.h1:
                assert path.points[0].col == 1
                assert path.points[-1].col == n + 1
                for a, b in zip(path.points, path.points[1:]):
                    assert b.col == a.col + 1
                    drop = b.row - a.row
                    assert drop == 0 or drop == (1 if path.kind == "H0" else -1)
            for path in ps.v0 + ps.v1:
                assert path.points[0].row == 1
                assert path.points[-1].row == n + 1
                for a, b in zip(path.points, path.points[1:]):
                    assert b.row == a.row + 1
                    slide = b.col - a.col
                    assert slide == 0 or slide == (1 if path.kind == "V0" else -1)


def test_diagonal_steps_cross_filled_squares_only():
    for pi in iter_kind("all", 5):
        word = pi.word
        for path in trace_paths(pi).all_paths():
            for a, b in zip(path.points, path.points[1:]):
                if a.row != b.row and a.col != b.col:
                    row, col = min(a.row, b.row), min(a.col, b.col)
                    assert word[row - 1] == col


def test_dtype_via_paths_matches_insertion_exhaustively():
    for n in range(1, 6):
        for pi in iter_kind("all", n):
            ps = trace_paths(pi)
            for r in range(1, n + 2):
                for c in range(1, n + 2):
                    assert ps.dtype_at((r, c)) == dtype(pi, (r, c))


def test_dtype_via_paths_corner():
    assert tuple(dtype_via_paths(Permutation.parse("1"), (1, 2))) == (1, 1)


def test_census_via_paths_paper_example():
    pi = Permutation.parse("316524")
    ps = trace_paths(pi)
    tally = {}
    for r in range(1, 8):
        for c in range(1, 8):
            d = tuple(ps.dtype_at((r, c)))
            tally[d] = tally.get(d, 0) + 1
    assert tally == {(0, 0): 22, (1, 0): 6, (0, 1): 6, (1, 1): 15}


def test_path_set_lookup_validates_range():
    ps = trace_paths(Permutation.parse("21"))
    with pytest.raises(ValueError):
        ps.dtype_at((4, 1))


def test_paths_require_nonempty():
    with pytest.raises(ValueError):
        trace_paths(Permutation(()))


def test_path_json_round_trips_through_json():
    path = trace_paths(Permutation.parse("316524")).h0[0]
    obj = json.loads(json.dumps(path_json_obj(path)))
    assert obj["kind"] == "H0"
    assert obj["points"][0] == [1, 1]
    assert all(len(point) == 2 for point in obj["points"])
