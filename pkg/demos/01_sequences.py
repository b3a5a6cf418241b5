"""Generating Rudin-Shapiro sequences and their generalized relatives.

Run from the repository root after `pip install -e .`:

    python demos/01_sequences.py
"""

import numpy as np

from rscorr import generalized_sequence, rs_sequence, rudin_shapiro_flips, shapiro_eval

# The first few orders.  Each sequence is a prefix of every later one.
for m in range(1, 5):
    print(f"order {m}: {rs_sequence(m).text()}")

top = rs_sequence(10)
assert all(
    np.array_equal(rs_sequence(m).terms, top.terms[: 1 << m]) for m in range(10)
)
print("\nprefix property holds through order 10")

# The generalized family flips the sign of each doubling step independently.
# One particular flip pattern recovers the Rudin-Shapiro sequence itself.
m = 4
print(f"\nflip bits recovering the plain sequence at order {m}: {rudin_shapiro_flips(m)}")
for flips in ((0, 0, 0, 0), (1, 1, 1, 1), rudin_shapiro_flips(m)):
    seq = generalized_sequence(m, flips)
    print(f"flips {flips}: {seq.text('compact')}")

# The associated polynomial q(z) = sum a_j z^j on the unit circle.  Its
# modulus never exceeds the number of terms, and at theta = 0 it collapses
# to the plain coefficient sum.
theta = np.linspace(0.0, 2.0 * np.pi, 9)
vals = shapiro_eval(3, theta)
print("\n|q(e^it)| at order 3 on a coarse grid:")
print(np.array_str(np.abs(vals), precision=4))
print("coefficient sum:", shapiro_eval(3, 0.0).real)
