import pytest

from permgrid import (
    DType,
    GridPoint,
    Permutation,
    build_B_sets,
    build_D_sets,
    chi,
    dtype,
    eta,
    eta_inv,
    eta_prime,
    eta_prime_inv,
    insert,
    iter_kind,
    psi_A,
    psi_I,
    psi_J,
    theta_A,
    theta_I,
    theta_J,
    xi,
    xi_inv,
)
from permgrid.bijections import TaggedElement


def P(text):
    return Permutation.parse(text)


# -- chi ---------------------------------------------------------------------


def test_chi():
    assert chi(1, 3) == 1
    assert chi(3, 1) == 4
    with pytest.raises(ValueError):
        chi(2, 2)


# -- single-square transfer ---------------------------------------------------


def test_theta_A_examples():
    assert theta_A(P("3751642"), 3) == (P("361542"), GridPoint(3, 5))
    assert theta_A(P("12"), 2) == (P("1"), GridPoint(2, 2))
    with pytest.raises(ValueError):
        theta_A(P("1"), 1)


def test_theta_psi_A_round_trip_exhaustive():
    for n in range(2, 6):
        for pi in iter_kind("all", n):
            for k in range(1, n + 1):
                sigma, pt = theta_A(pi, k)
                assert psi_A(sigma, pt) == (pi, k)
        for sigma in iter_kind("all", n - 1):
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    pi, k = psi_A(sigma, (r, c))
                    assert theta_A(pi, k) == (sigma, GridPoint(r, c))


def test_theta_A_lands_in_the_predicted_class():
    for pi in iter_kind("all", 5):
        i, j = pi.des + 1, pi.ides + 1
        for k in range(1, 6):
            sigma, pt = theta_A(pi, k)
            p, q = dtype(sigma, pt)
            assert (sigma.des + 1, sigma.ides + 1) == (i - p, j - q)


# -- mirror-pair and adjacent-pair insertions ----------------------------------


def test_xi_examples_and_symmetry():
    assert xi(P("132"), (1, 3)) == P("42513")
    assert xi(P("1"), (1, 2)) == P("321")
    assert xi(P("132"), (3, 1)) == xi(P("132"), (1, 3))


def test_xi_creates_the_mirror_squares():
    pi = P("2143")
    for i in range(1, 6):
        for j in range(1, 6):
            if i == j:
                continue
            sigma = xi(pi, (i, j))
            a, b = min(i, j), max(i, j)
            assert sigma.is_involution()
            assert sigma(a) == b + 1 and sigma(b + 1) == a


def test_xi_descent_delta():
    for n in range(1, 7):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 2):
                for j in range(1, n + 2):
                    if i == j:
                        continue
                    p, q = dtype(pi, (i, j))
                    assert xi(pi, (i, j)).des == pi.des + p + q


def test_xi_rejects_bad_input():
    with pytest.raises(ValueError):
        xi(P("132"), (2, 2))
    with pytest.raises(ValueError):
        xi(P("231"), (1, 2))  # not an involution


def test_eta_examples():
    assert eta(P("213"), 2) == P("42315")
    assert eta_prime(P("213"), 4) == P("21354")
    assert eta(Permutation(()), 1) == P("12")
    assert eta_prime(Permutation(()), 1) == P("21")


def test_eta_descent_deltas():
    for n in range(0, 7):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 2):
                p, q = dtype(pi, (i, i))
                assert p == q
                assert eta(pi, i).des == pi.des + p
                assert eta_prime(pi, i).des == pi.des + p + 1


def test_subdiagonal_insert_adds_one_descent():
    for n in range(1, 7):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 1):
                if pi(i) != i:
                    continue
                bigger = insert(pi, (i + 1, i))
                assert bigger.is_involution()
                assert bigger.des == pi.des + 1


def test_double_deletion_examples():
    assert xi_inv(P("42513"), (1, 3)) == P("132")
    assert eta_inv(P("42315"), 2) == P("213")
    assert eta_prime_inv(P("21354"), 4) == P("213")
    assert eta_prime_inv(P("13254"), 2) == P("132")


def test_double_deletions_require_their_pattern():
    with pytest.raises(ValueError):
        xi_inv(P("42513"), (2, 3))
    with pytest.raises(ValueError):
        eta_inv(P("42315"), 1)
    with pytest.raises(ValueError):
        eta_prime_inv(P("42315"), 2)


def test_double_insert_round_trips():
    for n in range(0, 6):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 2):
                for j in range(1, n + 2):
                    if i != j:
                        assert xi_inv(xi(pi, (i, j)), (i, j)) == pi
                assert eta_inv(eta(pi, i), i) == pi
                assert eta_prime_inv(eta_prime(pi, i), i) == pi


# -- diagonal symmetry ----------------------------------------------------------


def test_involution_dtype_mirror_symmetry():
    for n in range(1, 7):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 2):
                for j in range(1, n + 2):
                    p, q = dtype(pi, (i, j))
                    assert dtype(pi, (j, i)) == DType(q, p)


def test_ffi_diagonal_crossing_counts():
    # For a fixed-point-free involution of size N with d descents there are
    # d+1 diagonal points of delta (0,0) and N-d of delta (1,1).
    for n in range(2, 9, 2):
        for pi in iter_kind("ffi", n):
            diag = [dtype(pi, (i, i)) for i in range(1, n + 2)]
            assert diag.count(DType(0, 0)) == pi.des + 1
            assert diag.count(DType(1, 1)) == n - pi.des


# -- piecewise involution map ---------------------------------------------------


THETA_I_42315 = {
    1: ("far_above", "1,2,3", (1, 3), "B5_1", (3, 0)),
    2: ("fixed_paired", "2,1,3", (2, 2), "B5_3", (3, 1)),
    3: ("fixed_isolated", "3,2,1,4", (3, 3), "B1", (4, 2)),
    4: ("far_below", "1,2,3", (3, 1), "B5_2", (3, 0)),
    5: ("fixed_isolated", "4,2,3,1", (5, 5), "B1", (4, 2)),
}


def test_theta_I_worked_table():
    pi = P("42315")
    for i, (case, sigma, point, subset, target) in THETA_I_42315.items():
        trace = theta_I(pi, i)
        assert trace.case == case
        assert str(trace.element.sigma) == sigma
        assert tuple(trace.element.point) == point
        assert trace.element.subset == subset
        assert trace.element.target_nk == target
        assert trace.element.tag is None


def test_theta_I_validates_input():
    with pytest.raises(ValueError):
        theta_I(P("231"), 1)
    with pytest.raises(ValueError):
        theta_I(P("21"), 1)
    with pytest.raises(ValueError):
        theta_I(P("42315"), 6)


def test_theta_psi_I_round_trip_exhaustive():
    for n in range(3, 8):
        for pi in iter_kind("involutions", n):
            for i in range(1, n + 1):
                trace = theta_I(pi, i)
                assert psi_I(trace.element) == (pi, i)


def test_psi_I_rejects_mislabelled_elements():
    element = theta_I(P("42315"), 1).element
    fake = TaggedElement(element.sigma, element.point, element.family, "B5_2")
    with pytest.raises(ValueError):
        psi_I(fake)


def test_trace_serialization_fields():
    obj = theta_I(P("42315"), 3).to_json_obj()
    assert obj == {
        "input_perm": "4,2,3,1,5",
        "i": 3,
        "case": "fixed_isolated",
        "output_perm": "3,2,1,4",
        "point": [3, 3],
        "tag": None,
        "subset": "B1",
        "target_nk": [4, 2],
    }


# -- piecewise fixed-point-free map ----------------------------------------------


THETA_J_532614 = {
    1: ("2,1,4,3", (1, 4), None, "D2_1", (4, 2)),
    2: ("3,4,1,2", (2, 2), 1, "D5_1", (4, 1)),
    3: ("3,4,1,2", (2, 2), 2, "D5_2", (4, 1)),
    4: ("4,3,2,1", (4, 5), None, "D1_1", (4, 3)),
    5: ("2,1,4,3", (4, 1), None, "D2_2", (4, 2)),
    6: ("4,3,2,1", (5, 4), None, "D1_2", (4, 3)),
}


def test_theta_J_worked_table():
    pi = P("532614")
    for i, (sigma, point, tag, subset, target) in THETA_J_532614.items():
        trace = theta_J(pi, i)
        assert str(trace.element.sigma) == sigma
        assert tuple(trace.element.point) == point
        assert trace.element.tag == tag
        assert trace.element.subset == subset
        assert trace.element.target_nk == target


def test_theta_J_validates_input():
    with pytest.raises(ValueError):
        theta_J(P("42315"), 1)  # has a fixed point
    with pytest.raises(ValueError):
        theta_J(P("21"), 1)


def test_theta_psi_J_round_trip_exhaustive():
    for n in range(4, 9, 2):
        for pi in iter_kind("ffi", n):
            for i in range(1, n + 1):
                trace = theta_J(pi, i)
                assert psi_J(trace.element) == (pi, i)


# -- labelled collections ---------------------------------------------------------


def test_build_B_sets_small_cardinalities():
    sets = build_B_sets(2, 1)
    assert len(sets["B1"]) == 2
    assert {tuple(el.point) for el in sets["B1"]} == {(1, 1), (3, 3)}
    assert len(sets["B2"]) == 1

    sets = build_B_sets(2, 0)
    assert len(sets["B3"]) == 3  # all (0,0) points of the identity grid
    assert len(sets["B2"]) == 2


def test_build_B_sets_cardinalities_match_recurrence_terms():
    from permgrid.tables import brute_table

    for n in range(1, 7):
        table = brute_table("I", n).values
        for k in range(n):
            count = table.get(k, 0)
            sets = build_B_sets(n, k)
            assert len(sets["B1"]) == (k + 1) * count
            assert len(sets["B2"]) == (n - k) * count
            assert len(sets["B3"]) == ((k + 1) ** 2 + n) * count
            assert len(sets["B4"]) == (n + 1 + 2 * ((k + 1) * (n - k) - n)) * count
            assert len(sets["B5"]) == ((n - k) ** 2 + n) * count


def test_build_B_sets_empty_for_negative_k():
    assert all(not v for v in build_B_sets(4, -1).values())


def test_build_D_sets_small():
    sets = build_D_sets(4, 1)
    assert len(sets["D1"]) == 6  # off-diagonal (0,0) points of the 3412 grid
    assert len(sets["D3"]) == 4  # two diagonal (0,0) points, doubled
    assert all(el.tag in (1, 2) for el in sets["D3"] + sets["D5"])
    assert all(el.tag is None for el in sets["D1"] + sets["D2"] + sets["D4"])


def test_build_D_sets_empty_for_odd_size():
    assert all(not v for v in build_D_sets(5, 1).values())


def test_build_D_sets_grouped_cardinalities():
    from permgrid.tables import brute_table

    for m in range(4, 11, 2):  # m = 2n, collections built at size m - 2
        small = brute_table("J", m - 2).values
        for k in range(m):
            j_k = small.get(k, 0) if k < m - 2 else 0
            j_k1 = small.get(k - 1, 0) if 0 <= k - 1 < m - 2 else 0
            j_k2 = small.get(k - 2, 0) if 0 <= k - 2 < m - 2 else 0
            first = len(build_D_sets(m - 2, k)["D1"])
            assert first == (k * (k + 1) + m - 2) * j_k
            d2 = build_D_sets(m - 2, k - 1)
            assert len(d2["D2"]) + len(d2["D3"]) == 2 * ((k - 1) * (m - k - 1) + 1) * j_k1
            d4 = build_D_sets(m - 2, k - 2)
            assert len(d4["D4"]) + len(d4["D5"]) == ((m - k) * (m - k + 1) + m - 2) * j_k2
