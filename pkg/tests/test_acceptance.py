"""Acceptance gate: nine criteria, one test per criterion.

Run with ``pytest -v tests/test_acceptance.py``; the verbose listing
gives one pass/fail line per criterion. Each test also prints a short
summary (visible with ``-s`` or on failure).
"""

import time

from calamity.conway import (
    DOOMSDAY_DATES,
    doomsday_date,
    weekday_standard,
    year_offset_arithmetic,
)
from calamity.core import Direction, iter_dates, month_length, oracle_weekday
from calamity.doomyears import doomyear, year_offset_doomyear
from calamity.method import weekday_calamity, weekday_calamity_traced
from calamity.metrics import compare
from calamity.systems import classify, rotate_code, system, zero_month_count
from calamity.vector import (
    code_vocabulary,
    square_knot_backward,
    square_knot_forward,
    vector_code,
)

SWEEP_START, SWEEP_END = 1583, 2599
TIME_BUDGET_SECONDS = 30.0

TABLE_1_CODES = (43, 0, 0, 34, 52, 16, 34, 61, 25, 43, 0, 25)
TABLE_1_LEAP = {1: 34, 2: 61}

TABLE_2_F = (0, 11, 22, 33, 45, 56, 60, 71, 83, 94, 105, 116, 121, 132, 143, 154)
TABLE_2_B = (0, 15, 24, 33, 42, 50, 66, 75, 84, 92, 101, 110, 126, 134, 143, 152)
TABLE_2_D = (
    0, 151, 242, 333, 425, 506, 660, 751, 843, 924,
    1015, 1106, 1261, 1342, 1433, 1524,
)

WANG_DATES = [
    (1, 1), (2, 12), (3, 5), (4, 2), (5, 7), (6, 4),
    (7, 9), (8, 6), (9, 3), (10, 8), (11, 12), (12, 10),
]
WANG_CODES = (61, 25, 25, 52, 0, 34, 52, 16, 43, 61, 25, 43)

VOCABULARY_VALUES = {0, 16, 25, 34, 43, 52, 61}


def test_criterion_1_differential_equivalence():
    """Oracle, arithmetic, and both table directions agree on every date."""
    started = time.perf_counter()
    count = 0
    mismatches = 0
    for date in iter_dates(SWEEP_START, SWEEP_END):
        count += 1
        o = oracle_weekday(date)
        if not (
            o
            == weekday_standard(date)
            == weekday_calamity(date)
            == weekday_calamity_traced(date, Direction.BACKWARD)[0]
        ):
            mismatches += 1
    elapsed = time.perf_counter() - started
    print(
        f"criterion 1: {count} dates {SWEEP_START}..{SWEEP_END}, "
        f"{mismatches} mismatches, {elapsed:.1f}s"
    )
    assert mismatches == 0
    assert count > 370_000
    assert elapsed < TIME_BUDGET_SECONDS


def test_criterion_2_month_code_table():
    common = tuple(vector_code(m).value for m in range(1, 13))
    assert common == TABLE_1_CODES
    for month, value in TABLE_1_LEAP.items():
        assert vector_code(month, leap=True).value == value
    for month in range(3, 13):
        assert vector_code(month, leap=True) == vector_code(month)
    print(f"criterion 2: month codes {common}, leap overrides {TABLE_1_LEAP}")


def test_criterion_3_year_code_table():
    rows = [doomyear(d).packed for d in range(16)]
    assert tuple(r.F for r in rows) == TABLE_2_F
    assert tuple(r.B for r in rows) == TABLE_2_B
    assert tuple(r.D for r in rows) == TABLE_2_D
    print("criterion 3: all 16 packed year rows exact")


def test_criterion_4_square_knot_exhaustive():
    checked = 0
    for leap, year in ((False, 2023), (True, 2024)):
        for month in range(1, 13):
            anchor = doomsday_date(month, leap)
            code = vector_code(month, leap)
            assert square_knot_forward(anchor, code) == 0
            assert square_knot_backward(anchor, code) == 0
            for day in range(1, month_length(year, month) + 1):
                assert square_knot_forward(day, code) == (day - anchor) % 7
                assert square_knot_backward(day, code) == (anchor - day) % 7
                checked += 1
    print(f"criterion 4: {checked} (day, month, leap) triples, both directions")


def test_criterion_5_digit_sum_and_rotation():
    vocabulary = code_vocabulary()
    assert {c.value for c in vocabulary} == VOCABULARY_VALUES
    for k in range(7):
        for code in system(k).codes:
            digits = (code.tens, code.units)
            assert digits == (0, 0) or sum(digits) == 7
            assert code in vocabulary
    for k in range(7):
        for month in range(12):
            assert (
                rotate_code(system(k).codes[month])
                == system((k + 1) % 7).codes[month]
            )
    print("criterion 5: digit sums, vocabulary membership, uniform rotation over all k")


def test_criterion_6_year_table_properties():
    for y in range(72):
        assert year_offset_arithmetic(y + 28) == year_offset_arithmetic(y)
    for d in range(1, 16):
        step = (doomyear(d).forward_digit - doomyear(d - 1).forward_digit) % 7
        assert step == (2 if d % 4 == 0 else 1)
    for d in range(16):
        row = doomyear(d)
        expected = 0 if d % 4 == 0 else 6
        assert (row.forward_digit + row.backward_digit) % 7 == expected
    for yy in range(100):
        assert year_offset_doomyear(yy) == year_offset_arithmetic(yy)
    print("criterion 6: periodicity, stumble, complementarity, offset equivalence")


def test_criterion_7_equivalence_classes():
    conway = [(m, DOOMSDAY_DATES[m - 1]) for m in range(1, 13)]
    assert classify(conway) == 0
    assert classify(WANG_DATES) == 5
    assert tuple(c.value for c in system(5).codes) == WANG_CODES
    counts = [zero_month_count(k) for k in range(7)]
    assert counts[0] == 3
    assert all(c <= 2 for c in counts[1:])
    assert counts[5] == 1
    print(f"criterion 7: classify ok, zero-month counts {tuple(counts)}")


def test_criterion_8_operation_metrics():
    report = compare(SWEEP_START, SWEEP_END)
    std, cal = report.standard, report.calamity
    assert std.total == 5
    assert cal.total == 4
    assert cal.max_intermediate == 6
    assert std.divisions == 1
    assert std.large_mod_reductions == 2
    assert cal.divisions == 0
    assert cal.large_mod_reductions == 0
    # The standard method's peak is reported, deliberately unasserted.
    print(
        f"criterion 8: totals {std.total}/{cal.total}, calamity peak "
        f"{cal.max_intermediate}, standard peak {std.max_intermediate} (reported)"
    )


def test_criterion_9_per_system_end_to_end():
    # 1600..1999 is a full 400-year cycle touching all century classes.
    systems = [system(k) for k in range(7)]
    mismatches = 0
    count = 0
    for date in iter_dates(1600, 1999):
        expected = oracle_weekday(date)
        count += 1
        for sys_k in systems:
            if sys_k.weekday(date) != expected:
                mismatches += 1
    print(f"criterion 9: 7 systems x {count} dates, {mismatches} mismatches")
    assert mismatches == 0
    assert count == 146097
