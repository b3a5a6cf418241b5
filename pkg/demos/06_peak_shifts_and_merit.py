"""Where the autocorrelation peaks, and merit factors.

The shift maximizing |C_m(k)| hugs two thirds of the doubled length: the
ratio 3 k* / 2^(m+1) drifts toward 1, and for some orders the peak lands
exactly on the nearest integer to 2^(m+1)/3.  Merit factors converge to 3,
equivalently the sidelobe energy behaves like 4^m / 6.

    python demos/06_peak_shifts_and_merit.py
"""

from rscorr import (
    aperiodic_table_fast,
    conjecture_table,
    exact_match_orders,
    merit_factor,
    merit_factor_l4,
    ratio_sequence,
    sum_squares_ratio,
)

print("m   k*      |C|    unique  ell     gap   k*/ell")
for rec in conjecture_table(16):
    print(f"{rec.m:<3d} {rec.k_star:<7d} {abs(rec.value):<6d} "
          f"{str(rec.unique):<7s} {rec.ell:<7d} {rec.abs_gap:<5d} {rec.ratio:.4f}")

print("\norders whose peak sits exactly at the near-two-thirds shift:",
      exact_match_orders(16))

print("\nratio 3 k* / 2^(m+1):")
print("  " + "  ".join(f"{m}:{r:.4f}" for m, r in ratio_sequence(12)))

print("\nmerit factors (exact rationals) and the 4^m/6 energy ratio:")
for m in (2, 4, 6, 8, 10, 12):
    f = merit_factor(m)
    print(f"  m={m:2d}  F = {f} = {float(f):.6f}   energy ratio {float(sum_squares_ratio(m)):.6f}")

# The same merit factor via the fourth power mean of |q| on the circle.
for m in (4, 8):
    print(f"  m={m}: fourth-moment route gives {merit_factor_l4(m):.9f}")

# Data behind a peak-profile plot: |C_m(k)| against k for one order.
m = 10
table = aperiodic_table_fast(m)
peak = max(range(1, 1 << m), key=lambda k: abs(table[k]))
print(f"\norder {m}: peak |C| = {abs(table[peak])} at shift {peak} "
      f"(2^(m+1)/3 = {(1 << (m + 1)) / 3:.1f})")
print("write the full profile with:  rscorr plotdata --m 10 --out profile.csv")
