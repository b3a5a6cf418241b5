"""Aperiodic and periodic autocorrelation tables for Rudin-Shapiro sequences.

Every table can be computed two ways: by the direct O(4^m) summation over
shifted products (the oracle), or by a structural recurrence that fills
order ``m`` from orders ``m-1`` and ``m-2`` in O(2^m).  The recurrence
splits odd shifts into the four open dyadic quarters of ``(0, 2^m)``:

    Q1 = (0, 2^(m-2))          C_m(k) =  C_{m-1}(2^(m-1) - k)
    Q2 = (2^(m-2), 2^(m-1))    C_m(k) =  C_{m-1}(2^(m-1) - k) + 2 C_{m-2}(2^(m-1) - k)
    Q3 = (2^(m-1), 3*2^(m-2))  C_m(k) = -C_{m-1}(k - 2^(m-1)) + 2 C_{m-2}(k - 2^(m-1))
    Q4 = (3*2^(m-2), 2^m)      C_m(k) = -C_{m-1}(k - 2^(m-1))

Even shifts >= 2 vanish identically for both kinds, so the quarter
boundaries (all even) never need a rule.  The periodic table has its own
closed form: zero on Q1 and Q4, and ``4 C_{m-2}(|2^(m-1) - k|)`` on
Q2 and Q3.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterator, Union

import numpy as np

from .sequences import DEFAULT_MAX_ORDER, BinarySeq, check_order, rs_sequence

ArrayLike = Union[BinarySeq, np.ndarray, list, tuple]


def aperiodic_naive(s: ArrayLike, k: int) -> int:
    """Direct summation ``sum_i s_i s_{i+k}`` with zero padding outside the range."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    arr = np.asarray(s, dtype=np.int64)
    n = arr.size
    if k >= n:
        return 0
    return int(np.dot(arr[: n - k], arr[k:]))


def periodic_naive(s: ArrayLike, k: int) -> int:
    """Direct summation ``sum_i s_i s_{(i+k) mod n}``."""
    arr = np.asarray(s, dtype=np.int64)
    return int(np.dot(arr, np.roll(arr, -(k % arr.size))))


@dataclass(frozen=True)
class AutocorrTable:
    """All autocorrelations of one order.

    ``values[k]`` holds the correlation at shift ``k``; aperiodic tables
    cover ``k = 0..2^m`` and periodic tables ``k = 0..2^m - 1``.
    """

    m: int
    kind: str  # "aperiodic" | "periodic"
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64)
        expected = (1 << self.m) + (1 if self.kind == "aperiodic" else 0)
        if self.kind not in ("aperiodic", "periodic"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if vals.shape != (expected,):
            raise ValueError(f"expected {expected} values, got {vals.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __getitem__(self, k: int) -> int:
        return int(self.values[k])

    def __len__(self) -> int:
        return self.values.size

    def sum_squares(self) -> int:
        """Exact ``sum_{k>=1} values[k]**2`` as a Python int."""
        v = self.values[1:].astype(object)
        return int(np.sum(v * v))

    @property
    def default_filename(self) -> str:
        return f"{'C' if self.kind == 'aperiodic' else 'P'}_{self.m}.csv"

    def to_csv(self, fileobj=None) -> str | None:
        """Write ``k,value`` rows; returns the text when no file is given."""
        buf = fileobj or io.StringIO()
        buf.write("k,value\n")
        for k, v in enumerate(self.values):
            buf.write(f"{k},{int(v)}\n")
        if fileobj is None:
            return buf.getvalue()
        return None


def _naive_table(m: int, kind: str, max_order: int) -> AutocorrTable:
    seq = rs_sequence(m, max_order)
    n = 1 << m
    if kind == "aperiodic":
        vals = [aperiodic_naive(seq, k) for k in range(n + 1)]
    else:
        vals = [periodic_naive(seq, k) for k in range(n)]
    return AutocorrTable(m, kind, np.array(vals, dtype=np.int64))


def aperiodic_table_naive(m: int, max_order: int = DEFAULT_MAX_ORDER) -> AutocorrTable:
    """Oracle table built entirely by direct summation (O(4^m))."""
    check_order(m, max_order)
    return _naive_table(m, "aperiodic", max_order)


def periodic_table_naive(m: int, max_order: int = DEFAULT_MAX_ORDER) -> AutocorrTable:
    check_order(m, max_order)
    return _naive_table(m, "periodic", max_order)


def _next_aperiodic(prev1: np.ndarray, prev2: np.ndarray, m: int) -> np.ndarray:
    """One recurrence step: order-``m`` values from orders ``m-1`` and ``m-2``."""
    n = 1 << m
    q, h = n >> 2, n >> 1
    out = np.zeros(n + 1, dtype=np.int64)
    out[0] = n  # shift 0 is the sequence length; shift 2^m has zero overlap
    k1 = np.arange(1, q, 2)
    out[k1] = prev1[h - k1]
    k2 = np.arange(q + 1, h, 2)
    out[k2] = prev1[h - k2] + 2 * prev2[h - k2]
    k3 = np.arange(h + 1, 3 * q, 2)
    out[k3] = -prev1[k3 - h] + 2 * prev2[k3 - h]
    k4 = np.arange(3 * q + 1, n, 2)
    out[k4] = -prev1[k4 - h]
    return out


def iter_aperiodic_tables(
    m_max: int, max_order: int = DEFAULT_MAX_ORDER
) -> Iterator[AutocorrTable]:
    """Yield aperiodic tables for m = 0..m_max, keeping two levels of state."""
    check_order(m_max, max_order)
    prev1 = prev2 = None
    for m in range(m_max + 1):
        if m <= 2:
            vals = _naive_table(m, "aperiodic", max_order).values
        else:
            vals = _next_aperiodic(prev1, prev2, m)
        prev2, prev1 = prev1, vals
        yield AutocorrTable(m, "aperiodic", vals)


def aperiodic_table_fast(m: int, max_order: int = DEFAULT_MAX_ORDER) -> AutocorrTable:
    """Aperiodic table via the four-quarter recurrence (O(2^m) per level)."""
    for table in iter_aperiodic_tables(m, max_order):
        pass
    return table


def periodic_table(m: int, max_order: int = DEFAULT_MAX_ORDER) -> AutocorrTable:
    """Periodic table via the closed form on the four quarters.

    Orders 0..2 fall back to direct summation; from order 3 on, odd shifts
    in the middle two quarters carry ``4 C_{m-2}(|2^(m-1) - k|)`` and every
    other nonzero shift vanishes.
    """
    check_order(m, max_order)
    if m <= 2:
        return _naive_table(m, "periodic", max_order)
    c2 = aperiodic_table_fast(m - 2, max_order).values
    n = 1 << m
    q, h = n >> 2, n >> 1
    out = np.zeros(n, dtype=np.int64)
    out[0] = n
    k2 = np.arange(q + 1, h, 2)
    out[k2] = 4 * c2[h - k2]
    k3 = np.arange(h + 1, 3 * q, 2)
    out[k3] = 4 * c2[k3 - h]
    return AutocorrTable(m, "periodic", out)


@dataclass(frozen=True)
class EvenShiftReport:
    """Result of the exhaustive even-shift vanishing check."""

    m_max: int
    checked: int
    violations: tuple  # (kind, m, k, value) entries; expected empty

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "check": "even-shift-zero",
            "m_max": self.m_max,
            "checked": self.checked,
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
        }


def verify_even_zero(m_max: int, max_order: int = DEFAULT_MAX_ORDER) -> EvenShiftReport:
    """Confirm both table kinds vanish at every even shift ``2 <= k < 2^m``."""
    check_order(m_max, max_order)
    violations = []
    checked = 0
    for table in iter_aperiodic_tables(m_max, max_order):
        for tab in (table, periodic_table(table.m, max_order)):
            if tab.m < 2:
                continue
            even = tab.values[2 : 1 << tab.m : 2]
            checked += even.size
            if np.any(even != 0):
                for k in np.nonzero(even)[0]:
                    violations.append((tab.kind, tab.m, int(2 + 2 * k), int(even[k])))
    return EvenShiftReport(m_max, checked, tuple(violations))
