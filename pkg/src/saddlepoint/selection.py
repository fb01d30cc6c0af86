"""Worst-case linear-time selection with exact comparison counting.

`select_kth` finds the i-th smallest element of a sequence (1-based,
multiset order) while charging every key comparison it performs to an
optional Counters object. The strategy is a deterministic introselect:
median-of-3 quickselect steps, falling back to median-of-medians (groups
of 5) whenever a step fails to shrink the range by at least 10%. The
fallback bounds the total work by a geometric series, so the worst case
stays O(n) with no randomness consumed; counts are a pure function of the
input order.

Ranges at or below `INSERTION_CUTOFF` are insertion-sorted and indexed.
"""

from __future__ import annotations

INSERTION_CUTOFF = 32


class _Cmp:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


def select_kth(items, rank: int, counters=None):
    """Return the rank-th smallest item (1-based); permutes `items` in place."""
    n = len(items)
    if not 1 <= rank <= n:
        raise ValueError(f"rank {rank} out of range 1..{n}")
    cmp = _Cmp()
    value = _select(items, 0, n - 1, rank - 1, cmp, force_mom=False)
    if counters is not None:
        counters.comparisons += cmp.n
    return value


def _select(a, lo, hi, k, cmp, force_mom):
    while True:
        size = hi - lo + 1
        if size <= INSERTION_CUTOFF:
            _insertion_sort(a, lo, hi, cmp)
            return a[k]
        if force_mom:
            pivot = _median_of_medians(a, lo, hi, cmp)
        else:
            pivot = _median3(a, lo, (lo + hi) // 2, hi, cmp)
        lt, gt = _partition3(a, lo, hi, pivot, cmp)
        if k < lt:
            new_lo, new_hi = lo, lt - 1
        elif k > gt:
            new_lo, new_hi = gt + 1, hi
        else:
            return a[k]
        # Progress guard: a bad median-of-3 step hands the next step to
        # median-of-medians, keeping the worst case linear.
        force_mom = (new_hi - new_lo + 1) > 0.9 * size
        lo, hi = new_lo, new_hi


def _insertion_sort(a, lo, hi, cmp):
    for i in range(lo + 1, hi + 1):
        x = a[i]
        j = i - 1
        while j >= lo:
            cmp.n += 1
            if x < a[j]:
                a[j + 1] = a[j]
                j -= 1
            else:
                break
        a[j + 1] = x


def _median3(a, i, j, k, cmp):
    x, y, z = a[i], a[j], a[k]
    cmp.n += 1
    if x < y:
        cmp.n += 1
        if y < z:
            return y
        cmp.n += 1
        return z if x < z else x
    cmp.n += 1
    if x < z:
        return x
    cmp.n += 1
    return z if y < z else y


def _median_of_medians(a, lo, hi, cmp):
    n = hi - lo + 1
    groups = 0
    g = lo
    while g <= hi:
        end = min(g + 4, hi)
        _insertion_sort(a, g, end, cmp)
        med = (g + end) // 2
        a[lo + groups], a[med] = a[med], a[lo + groups]
        groups += 1
        g += 5
    return _select(a, lo, lo + groups - 1, lo + (groups - 1) // 2, cmp, force_mom=False)


def _partition3(a, lo, hi, pivot, cmp):
    """Dutch-flag partition around `pivot`; returns (lt, gt) with
    a[lo..lt-1] < pivot, a[lt..gt] == pivot, a[gt+1..hi] > pivot."""
    lt, i, gt = lo, lo, hi
    while i <= gt:
        x = a[i]
        cmp.n += 1
        if x < pivot:
            a[lt], a[i] = x, a[lt]
            lt += 1
            i += 1
        else:
            cmp.n += 1
            if pivot < x:
                a[i], a[gt] = a[gt], x
                gt -= 1
            else:
                i += 1
    return lt, gt
