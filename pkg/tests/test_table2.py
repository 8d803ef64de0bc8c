import math

import pytest

from rieszshift import table2


@pytest.fixture(scope="module")
def rows():
    return table2.compute_table()


def test_shape(rows):
    assert [r[0] for r in rows] == list(table2.SIGMAS)
    assert all(len(r) == 1 + len(table2.COLUMNS) for r in rows)
    assert all(math.isfinite(v) and v > 0 for r in rows for v in r)


def test_deterministic(rows):
    assert table2.compute_table() == rows


def test_sigma_02_row(rows):
    got = [table2.round_sig(v, 3) for v in rows[0][1:]]
    assert got == [0.353, 0.356, 1.01, 0.245, 0.464, 1.90]


def test_sigma_3_and_5_cells(rows):
    by_sigma = {r[0]: r[1:] for r in rows}
    assert f"{by_sigma[3.0][0]:.2e}" == "3.00e-37"
    assert f"{by_sigma[3.0][5]:.2e}" == "7.68e+07"
    assert f"{by_sigma[5.0][0]:.2e}" == "2.18e-105"
    assert f"{by_sigma[5.0][2]:.2e}" == "7.19e+106"


def test_strict_mismatches_are_the_known_four(rows):
    bad = sorted((c.sigma, c.column) for c in table2.compare(rows, "strict") if not c.ok)
    assert bad == [(0.4, "A_G"), (1.0, "A_G"), (2.0, "B_G/A_G"), (3.0, "B_G/A_G")]


def test_tolerant_passes_with_errata(rows):
    checks = table2.compare(rows, "tolerant")
    assert len(checks) == 48 and all(c.ok for c in checks)
    fixed = [c for c in checks if c.note]
    assert [(c.sigma, c.column, c.published) for c in fixed] == [(1.0, "A_G", "6.50e-4")]


def test_errata_consistent_with_its_own_row():
    # the corrected A_G(1) is B_G / (B_G/A_G) from the printed row
    _, b, ratio = (float(x) for x in table2.PUBLISHED[1.0][:3])
    assert table2.round_sig(b / ratio, 3) == float(table2.ERRATA[(1.0, "A_G")][0])


def test_printed_precision_helpers():
    assert table2._printed_sig("0.037") == 2
    assert table2._printed_sig("6.45e-4") == 3
    assert table2._printed_sig("267.75") == 5
    assert table2._last_digit_unit("6.45e-4") == pytest.approx(1e-6)
    assert table2._last_digit_unit("157.08") == pytest.approx(1e-2)
    assert table2.round_sig(0.0, 3) == 0.0
    assert table2.round_sig(123456.0, 3) == 123000.0


def test_deviation_units(rows):
    cell = next(c for c in table2.compare(rows, "tolerant") if (c.sigma, c.column) == (0.2, "A_G"))
    assert cell.deviation_units <= 1.0


def test_unknown_rows_skipped_and_bad_mode():
    assert table2.compare([(0.7, 1, 1, 1, 1, 1, 1)]) == []
    with pytest.raises(ValueError):
        table2.compare([], mode="loose")
