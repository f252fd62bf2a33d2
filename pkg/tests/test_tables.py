import pytest

from permgrid import (
    InvariantError,
    class_size,
    eulerian_marginal,
    eulerian_number,
    gf_check,
    is_log_concave,
    is_unimodal,
    table,
    verify_recurrence,
)
from permgrid.tables import (
    StatTable,
    brute_table,
    class_total,
    descent_polynomial,
    recurrence_table,
    _exact_div,
)


def test_brute_A_small():
    assert brute_table("A", 1).values == {(1, 1): 1}
    a3 = brute_table("A", 3).values
    assert a3 == {(1, 1): 1, (2, 2): 4, (3, 3): 1}


def test_brute_I_and_J_small():
    assert brute_table("I", 4).sequence() == [1, 4, 4, 1]
    assert brute_table("J", 4).sequence() == [0, 1, 1, 1]
    assert brute_table("I", 1).sequence() == [1]
    assert brute_table("J", 2).sequence() == [0, 1]


def test_table_totals():
    for n in range(1, 8):
        assert brute_table("A", n).total() == class_total("A", n)
        assert brute_table("I", n).total() == class_total("I", n)
    for n in range(2, 9, 2):
        assert brute_table("J", n).total() == class_total("J", n)
    assert class_total("J", 8) == 105


def test_A_symmetry():
    for n in range(1, 8):
        values = brute_table("A", n).values
        assert all(values.get((j, i), 0) == v for (i, j), v in values.items())


def test_kind_and_size_validation():
    with pytest.raises(ValueError):
        table("J", 5)
    with pytest.raises(ValueError):
        table("A", 0)
    with pytest.raises(ValueError):
        table("X", 3)
    with pytest.raises(ValueError):
        table("A", 3, method="magic")


@pytest.mark.parametrize("kind,n_max", [("A", 7), ("I", 10), ("J", 12)])
def test_methods_agree(kind, n_max):
    sizes = range(2 if kind == "J" else 1, n_max + 1, 2 if kind == "J" else 1)
    for n in sizes:
        reference = brute_table(kind, n)
        for method in ("recurrence", "bijective"):
            other = table(kind, n, method=method)
            assert other.entries() == reference.entries(), (kind, n, method)


def test_workers_produce_identical_tables():
    solo = brute_table("A", 6)
    duo = brute_table("A", 6, workers=2)
    assert solo.values == duo.values
    assert brute_table("I", 7, workers=2).values == brute_table("I", 7).values


def test_recurrence_divisibility_guard():
    with pytest.raises(InvariantError):
        _exact_div(7, 3, "unit test")


def test_verify_recurrence_reports():
    for kind, n_max in (("A", 6), ("I", 8), ("J", 10)):
        report = verify_recurrence(kind, n_max)
        assert report["passed"], report["mismatches"][:3]
        assert report["entries_checked"] > 0


def test_verify_recurrence_spot_values():
    # Hand-evaluable instances of each recurrence on brute tables.
    a2 = brute_table("A", 2).values
    a3 = brute_table("A", 3).values
    assert 3 * a3[(2, 2)] == (2 * 2 + 2) * a2.get((2, 2), 0) + (
        1 - 3 + 2 * (3 + 1 - 2)
    ) * a2.get((1, 2), 0) + (1 - 3 + 2 * (3 + 1 - 2)) * a2.get((2, 1), 0) + (
        3 - 1 + (3 + 1 - 2) * (3 + 1 - 2)
    ) * a2.get(
        (1, 1), 0
    )
    i2, i3 = brute_table("I", 2).values, brute_table("I", 3).values
    assert 3 * i3[1] == 2 * i2[1] + 2 * i2[0] + 2 * 1  # last term uses size-1 table
    j4 = brute_table("J", 4).values
    assert 4 * j4[2] == 2 * ((1) * (4 - 2 - 1) + 1) * brute_table("J", 2).values[1]


def test_eulerian_numbers():
    assert eulerian_number(3, 1) == 4
    assert eulerian_number(4, 1) == 11
    assert eulerian_number(1, 0) == 1
    assert [eulerian_number(4, m) for m in range(4)] == [1, 11, 11, 1]


def test_eulerian_marginal():
    for n in range(1, 8):
        report = eulerian_marginal(n)
        assert report["passed"], report["mismatches"]


def test_descent_polynomial_conventions():
    assert descent_polynomial("I", 0) == [1]
    assert descent_polynomial("J", 0) == [1]
    assert descent_polynomial("J", 3) == [0]
    assert descent_polynomial("I", 4) == [1, 4, 4, 1]


def test_gf_identities():
    for kind in ("I", "J"):
        report = gf_check(kind, 6)
        assert report["passed"], report["mismatches"][:3]
        assert report["coefficients_checked"] == 49


def test_gf_u0_slice_is_geometric():
    # At u^0 both sides reduce to the geometric series in t.
    report = gf_check("I", 0)
    assert report["passed"]


def test_gf_margin_guard():
    with pytest.raises(ValueError):
        gf_check("I", 2, margin=-3)
    with pytest.raises(ValueError):
        gf_check("A", 2)


def test_unimodal_and_log_concave():
    assert is_unimodal((1, 4, 4, 1))
    assert not is_unimodal((1, 0, 1))
    assert is_unimodal((0, 1, 1, 1))
    assert is_log_concave((1, 4, 4, 1))
    assert not is_log_concave((1, 1, 4, 1, 8))
    with pytest.raises(ValueError):
        is_unimodal(())


def test_serialization_shapes():
    tbl = brute_table("I", 4)
    obj = tbl.to_json_obj()
    assert obj["entries"] == [[0, "1"], [1, "4"], [2, "4"], [3, "1"]]
    assert tbl.to_csv_text().splitlines()[0] == "k,value"
    a = brute_table("A", 2)
    assert a.to_csv_text().splitlines() == ["i,j,value", "1,1,1", "1,2,0", "2,1,0", "2,2,1"]
    with pytest.raises(ValueError):
        a.sequence()


def test_stat_table_entry_grid_is_complete():
    tbl = StatTable("A", 3, "brute", {(1, 1): 1})
    assert len(tbl.entries()) == 9


def test_big_values_stay_exact():
    # Entries of the size-9 joint table are large enough to catch any silent
    # float contamination.
    tbl = recurrence_table("A", 12)
    assert tbl.total() == class_size("all", 12)
    assert all(isinstance(v, int) for v in tbl.values.values())
