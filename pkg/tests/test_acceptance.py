"""Acceptance suite: one test per criterion, each printing a summary line.

Two sub-criteria are implemented exactly as stated but are expected to
fail, because the stated constants contradict values that two independent
computation routes agree on (see the strict xfail reasons inline).  All
other criteria pass at their stated tolerances.
"""

import json
import time

import numpy as np
import pytest
from conftest import record_criterion

from rscorr.autocorr import (
    aperiodic_table_fast,
    aperiodic_table_naive,
    iter_aperiodic_tables,
    periodic_table,
    periodic_table_naive,
    verify_even_zero,
)
from rscorr.cli import main
from rscorr.jsr import bnb_bracket, invariant_polytope
from rscorr.norms import (
    diagonalization_residual,
    eigen_constants,
    katz_constant,
    lower_bound_ratios,
    lower_bound_value,
    max_ratios,
    verify_power_bounds,
)
from rscorr.recurrence import nearest_third, normal_form, v_direct, v_product
from rscorr.sequences import rs_sequence
from rscorr.stats import conjecture_table, merit_factor, merit_factor_l4, sum_squares_ratio

PUBLISHED_SEQUENCES = {
    1: [1, 1],
    2: [1, 1, 1, -1],
    3: [1, 1, 1, -1, 1, 1, -1, 1],
}

#: Gap column as printed in the source table (m = 3..16).
PUBLISHED_GAPS = (2, 0, 8, 0, 34, 2, 22, 8, 0, 34, 86, 136, 18, 0)
#: Same column with the m = 15 entry corrected to the value both the
#: recurrence tables and the direct O(4^m) oracle produce.
VERIFIED_GAPS = (2, 0, 8, 0, 34, 2, 22, 8, 0, 34, 86, 136, 8, 0)


def test_criterion_01_sequence_fidelity(capsys):
    t0 = time.time()
    for m, expected in PUBLISHED_SEQUENCES.items():
        assert main(["gen", "--m", str(m)]) == 0
        out = capsys.readouterr().out.strip()
        parsed = [1 if tok == "+" else -1 for tok in out.split()]
        assert parsed == expected, m
        assert rs_sequence(m).terms.tolist() == expected
    record_criterion("01", "sequence fidelity (gen, m=1..3)", "PASS",
                     f"{time.time() - t0:.2f}s")


def test_criterion_02_oracle_equivalence():
    t0 = time.time()
    for m in range(13):
        fast = aperiodic_table_fast(m)
        assert np.array_equal(fast.values, aperiodic_table_naive(m).values), m
        per = periodic_table(m)
        assert np.array_equal(per.values, periodic_table_naive(m).values), m
    record_criterion("02", "fast tables equal the naive oracle, m<=12", "PASS",
                     f"{time.time() - t0:.2f}s")


def test_criterion_03_even_shifts_vanish():
    t0 = time.time()
    report = verify_even_zero(14)
    assert report.passed, report.violations
    record_criterion("03", "even shifts vanish, m<=14", "PASS",
                     f"{report.checked} shifts, {time.time() - t0:.2f}s")


def test_criterion_04_decomposition():
    t0 = time.time()
    cases = 0
    for m in range(3, 13):
        for k in range(1, 1 << m, 2):
            cases += 1
            direct = v_direct(m, k) if m <= 4 else None
            prod = v_product(m, k)
            recon = normal_form(m, k).reconstruct()
            if direct is not None:
                assert np.array_equal(prod, direct), (m, k)
            assert np.array_equal(recon, prod), (m, k)
    # the same sweep against the tables, without per-case table rebuilds
    prev = None
    for table in iter_aperiodic_tables(12):
        m, n = table.m, 1 << table.m
        if m >= 3:
            for k in range(1, n, 2):
                k_prev = k if k <= n >> 1 else n - k
                direct = np.array([table[k], table[n - k], prev[k_prev]])
                assert np.array_equal(v_product(m, k), direct), (m, k)
        prev = table.values
    assert cases == 4092
    record_criterion("04", "product and normal form match tables, m<=12", "PASS",
                     f"{cases} cases, {time.time() - t0:.2f}s")


def test_criterion_05_periodic_formula():
    t0 = time.time()
    for m in range(3, 13):
        fast = periodic_table(m)
        oracle = periodic_table_naive(m)
        assert np.array_equal(fast.values, oracle.values), m
    record_criterion("05", "structural periodic formula matches oracle, m=3..12",
                     "PASS", f"{time.time() - t0:.2f}s")


def test_criterion_06_norm_constants():
    t0 = time.time()
    report = verify_power_bounds(1e-9)
    assert report.passed, [c.to_dict() for c in report.failures()]
    tails = [c for c in report.cases if c.kind == "frobenius-tail"]
    assert len(tails) == 2 and all(c.norm <= 0.970 + 1e-9 for c in tails)
    record_criterion("06", "norm-bound constants 0.970 / 1.028", "PASS",
                     f"{len(report.cases)} cases, {time.time() - t0:.2f}s")


def test_criterion_07_upper_ratio_and_nonzero():
    t0 = time.time()
    bound = katz_constant()  # 5 / lam^4 = 0.660114...; prints as 0.6601
    ratios = dict(max_ratios(24))
    for m in range(1, 25):
        assert ratios[m] <= bound + 1e-9, (m, ratios[m])
    assert abs(ratios[4] - 0.6601) <= 1e-4
    assert abs(ratios[4] - bound) <= 1e-12  # sharp at m = 4
    for m in range(3, 25):
        assert lower_bound_value(m) != 0, m
    record_criterion("07a", "max ratio <= 5/lam^4 (0.6601...), sharp at m=4;"
                     " near-two-thirds value never zero", "PASS",
                     f"sup={ratios[4]:.6f}, {time.time() - t0:.2f}s")


@pytest.mark.xfail(
    strict=True,
    reason="stated floor 0.1 is unattainable: |C_5(21)| = 1 (verified by the "
    "direct oracle), so the ratio at m=5 is 1/lam^5 = 0.0796 < 0.1",
)
def test_criterion_07_lower_ratio_floor():
    ratios = dict(lower_bound_ratios(24))
    record_criterion("07b", "near-two-thirds ratio >= 0.1 for m=3..24",
                     "FAIL", f"as stated; min is {min(ratios.values()):.4f} at m=5 "
                     "(expected failure; analysis in this test's xfail reason)")
    assert all(r >= 0.1 for r in ratios.values()), min(ratios.items(), key=lambda kv: kv[1])


@pytest.mark.xfail(
    strict=True,
    reason="published gap at m=15 is 18, but the recurrence tables and the "
    "direct O(4^m) oracle both give |21837 - 21845| = 8 (|C| = 961 at 21837, "
    "unique; C(21827) = -43)",
)
def test_criterion_08_published_gap_column():
    gaps = tuple(r.abs_gap for r in conjecture_table(16))
    record_criterion("08a", "gap column equals the published row (incl. 18 at m=15)",
                     "FAIL", f"as stated; computed m=15 gap is {gaps[12]} "
                     "(expected failure; analysis in this test's xfail reason)")
    assert gaps == PUBLISHED_GAPS, gaps


def test_criterion_08_gap_column_ground_truth():
    t0 = time.time()
    records = conjecture_table(16)
    gaps = tuple(r.abs_gap for r in records)
    assert gaps == VERIFIED_GAPS
    assert all(r.unique for r in records)
    # independent route for the disputed order: direct correlation of the
    # full length-2^15 sequence
    s = rs_sequence(15).terms.astype(np.float64)
    full = np.rint(np.correlate(s, s, "full")[(1 << 15) - 1 :]).astype(np.int64)
    assert np.array_equal(full, aperiodic_table_fast(15).values[: 1 << 15])
    body = np.abs(full[1:])
    k_star = int(np.argmax(body)) + 1
    assert k_star == 21837 and int(body[k_star - 1]) == 961
    assert abs(k_star - nearest_third(15)) == 8
    record_criterion("08b", "gap column against recomputed ground truth "
                     "(m=15 gap is 8, oracle-confirmed)", "PASS",
                     f"{time.time() - t0:.2f}s")


def test_criterion_09_merit_factors():
    t0 = time.time()
    for m in range(1, 17):
        assert sum_squares_ratio(m) * merit_factor(m) == 3, m
    for m in range(8, 21):
        assert abs(float(merit_factor(m)) - 3) < 0.5, m
    for m in range(1, 11):
        exact = float(merit_factor(m))
        assert abs(merit_factor_l4(m, 1 << (m + 3)) - exact) <= 1e-6 * exact, m
    record_criterion("09", "merit identity exact; |F-3| < 0.5 on 8..20; "
                     "fourth-moment route agrees to 1e-6", "PASS",
                     f"{time.time() - t0:.2f}s")


def test_criterion_10_jsr():
    t0 = time.time()
    lam = eigen_constants().lam
    bracket = bnb_bracket(12)
    assert bracket.lower <= lam + 1e-9
    assert bracket.upper >= lam - 1e-9
    assert bracket.upper / bracket.lower <= 1.05
    run = invariant_polytope(tol=1e-8)
    assert run.success
    assert run.rounds <= 10
    assert run.max_violation <= 1e-8
    assert 24 <= run.vertex_count <= 36
    record_criterion("10", "JSR bracket at depth 12 and invariant polytope", "PASS",
                     f"ratio={bracket.upper / bracket.lower:.4f}, "
                     f"rounds={run.rounds}, vertices={run.vertex_count}, "
                     f"violation={run.max_violation:.1e}, {time.time() - t0:.2f}s")


def test_criterion_11_eigenstructure():
    t0 = time.time()
    c = eigen_constants()
    assert abs(c.lam**3 + c.lam**2 - 2 * c.lam - 4) <= 1e-12
    assert abs(c.nu**3 + c.nu**2 - 2 * c.nu - 4) <= 1e-12
    assert abs(c.lam + 2 * c.nu.real + 1) <= 1e-12          # root sum
    assert abs(c.lam * abs(c.nu) ** 2 - 4) <= 1e-12         # root product
    assert abs(abs(c.gamma) ** 2 - 236) <= 1e-9
    worst = 0.0
    for which in ("MA", "M", "AM"):
        for j in range(1, 31):
            res = diagonalization_residual(which, j)
            assert res <= 1e-6 * c.lam**j, (which, j, res)
            worst = max(worst, res / c.lam**j)
    record_criterion("11", "eigenstructure and diagonalization residuals", "PASS",
                     f"worst residual/lam^j = {worst:.1e}, {time.time() - t0:.2f}s")
