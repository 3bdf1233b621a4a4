from zeroforcing.conjecture import COLUMNS, conjecture_sweep, rows_to_csv, rows_to_text


def test_small_sweep():
    rows = conjecture_sweep(4)
    got = {(r.s, r.t): (r.z, r.i, r.status) for r in rows}
    assert got == {(3, 3): (5, 2, "confirmed"), (3, 4): (6, 1, "confirmed"), (4, 4): (8, 1, "confirmed")}
    assert "odd formula" in rows[0].note and "even formula" in rows[2].note


def test_csv_layout():
    rows = conjecture_sweep(3)
    lines = rows_to_csv(rows).splitlines()
    assert lines[0] == ",".join(COLUMNS)
    assert lines[1].startswith("3,3,9,5,2,5,5,")
    assert len(lines) == 2


def test_skipped_under_budget():
    rows = conjecture_sweep(4, budget=50)
    assert all(r.status == "skipped" and r.z is None for r in rows)
    assert "skipped" in rows_to_text(rows)
