"""Numba-compiled hot kernels.

All routines take float64 arrays and never mutate their inputs.  Ranks are
0-based here; the public wrappers translate from 1-based ranks.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _select_inplace(a, k):
    # Hoare partition, median-of-three pivot; deterministic.
    lo = 0
    hi = a.shape[0] - 1
    while hi > lo:
        mid = (lo + hi) // 2
        if a[mid] < a[lo]:
            a[mid], a[lo] = a[lo], a[mid]
        if a[hi] < a[lo]:
            a[hi], a[lo] = a[lo], a[hi]
        if a[hi] < a[mid]:
            a[hi], a[mid] = a[mid], a[hi]
        pivot = a[mid]
        i = lo
        j = hi
        while i <= j:
            while a[i] < pivot:
                i += 1
            while a[j] > pivot:
                j -= 1
            if i <= j:
                a[i], a[j] = a[j], a[i]
                i += 1
                j -= 1
        if k <= j:
            hi = j
        elif k >= i:
            lo = i
        else:
            return a[k]
    return a[k]


@njit(cache=True)
def select_kth(values, k):
    work = values.copy()
    return _select_inplace(work, k)


@njit(cache=True)
def _median_inplace(a):
    # Mean of the two central order statistics for even length.
    n = a.shape[0]
    half = n // 2
    if n % 2 == 1:
        return _select_inplace(a, half)
    lower = _select_inplace(a, half - 1)
    upper = a[half]
    for t in range(half + 1, n):
        if a[t] < upper:
            upper = a[t]
    return (lower + upper) / 2.0


@njit(cache=True)
def _whimed_into(values, weights, m, acand, wcand, work):
    """High weighted median of the first ``m`` entries, using the three
    scratch buffers (each at least ``m`` long); inputs untouched."""
    total = 0
    for t in range(m):
        total += weights[t]
        acand[t] = values[t]
        wcand[t] = weights[t]
    size = m
    wrest = 0
    while True:
        for t in range(size):
            work[t] = acand[t]
        trial = _select_inplace(work[:size], size // 2)
        wleft = 0
        wmid = 0
        for t in range(size):
            if acand[t] < trial:
                wleft += wcand[t]
            elif acand[t] == trial:
                wmid += wcand[t]
        if 2 * (wrest + wleft) > total:
            kept = 0
            for t in range(size):
                if acand[t] < trial:
                    acand[kept] = acand[t]
                    wcand[kept] = wcand[t]
                    kept += 1
            size = kept
        elif 2 * (wrest + wleft + wmid) > total:
            return trial
        else:
            kept = 0
            for t in range(size):
                if acand[t] > trial:
                    acand[kept] = acand[t]
                    wcand[kept] = wcand[t]
                    kept += 1
            size = kept
            wrest += wleft + wmid


@njit(cache=True)
def _whimed(values, weights, m):
    return _whimed_into(
        values, weights, m,
        np.empty(m, dtype=np.float64), np.empty(m, dtype=np.int64), np.empty(m, dtype=np.float64),
    )


@njit(cache=True)
def weighted_high_median(values, weights):
    return _whimed(values, weights, values.shape[0])


@njit(cache=True)
def sn_sorted(y):
    """lomed_i himed_j |y_i - y_j| for ascending ``y``.

    Row i is the merge of two ascending runs, y_i - y_{i-1-t} and
    y_{i+1+t} - y_i; its high median is found by bisection on how many
    elements come from the left run.
    """
    n = y.shape[0]
    r = n // 2
    himed = np.empty(n, dtype=np.float64)
    for i in range(n):
        len_a = i
        len_b = n - 1 - i
        lo = r - len_b
        if lo < 0:
            lo = 0
        hi = r if r < len_a else len_a
        while lo < hi:
            a = (lo + hi) // 2
            b = r - a
            if y[i + b] - y[i] <= y[i] - y[i - 1 - a]:
                hi = a
            else:
                lo = a + 1
        a = lo
        b = r - a
        val = 0.0
        if a > 0:
            val = y[i] - y[i - a]
        if b > 0:
            right = y[i + b] - y[i]
            if right > val:
                val = right
        himed[i] = val
    return _select_inplace(himed, (n + 1) // 2 - 1)


@njit(cache=True)
def qn_sorted(y):
    """k-th smallest of y_j - y_i (i < j) for ascending ``y`` without forming
    the pairs.  Row i holds columns i+1..n-1; each row keeps a candidate
    column window that is narrowed around the weighted median of row
    mid-points until at most n candidates remain."""
    n = y.shape[0]
    h = n // 2 + 1
    k = h * (h - 1) // 2
    if n >= 2**31:
        raise ValueError("sample too large for 32-bit column indices")
    # 32-bit indices halve the memory traffic of the per-row passes
    left = np.empty(n, dtype=np.int32)
    right = np.empty(n, dtype=np.int32)
    p_end = np.empty(n, dtype=np.int32)
    q_end = np.empty(n, dtype=np.int32)
    work = np.empty(n, dtype=np.float64)
    wts = np.empty(n, dtype=np.int32)
    wwork = np.empty(n, dtype=np.float64)
    for i in range(n):
        left[i] = i + 1
        right[i] = n - 1
    ncand = n * (n - 1) // 2
    below = 0
    while ncand > n:
        m = 0
        for i in range(n):
            if left[i] <= right[i]:
                mid = (left[i] + right[i]) // 2
                work[m] = y[mid] - y[i]
                wts[m] = right[i] - left[i] + 1
                m += 1
        # work and wts are rebuilt every pass, so the median may reorder them
        trial = _whimed_into(work, wts, m, work, wts, wwork)

        # p_end[i]: first column j > i with y_j - y_i >= trial; q_end[i]: first
        # with y_j - y_i > trial.  Both are nondecreasing in i, and columns left
        # of left[i] were discarded below an earlier, smaller trial, so each
        # scan may start at left[i].
        jp = 0
        jq = 0
        sum_p = 0
        sum_q = 0
        for i in range(n):
            lo = left[i]
            if jp < lo:
                jp = lo
            while jp < n and y[jp] - y[i] < trial:
                jp += 1
            if jq < jp:
                jq = jp
            while jq < n and y[jq] - y[i] <= trial:
                jq += 1
            p_end[i] = jp
            q_end[i] = jq
            sum_p += jp - (i + 1)
            sum_q += jq - (i + 1)

        if k <= sum_p:
            for i in range(n):
                if p_end[i] - 1 < right[i]:
                    right[i] = p_end[i] - 1
        elif k > sum_q:
            for i in range(n):
                if q_end[i] > left[i]:
                    left[i] = q_end[i]
        else:
            return trial

        ncand = 0
        below = 0
        for i in range(n):
            if right[i] >= left[i]:
                ncand += right[i] - left[i] + 1
            below += left[i] - (i + 1)

    cand = np.empty(ncand, dtype=np.float64)
    m = 0
    for i in range(n):
        for j in range(left[i], right[i] + 1):
            cand[m] = y[j] - y[i]
            m += 1
    return _select_inplace(cand, k - below - 1)


@njit(cache=True)
def mad(x):
    work = x.copy()
    med = _median_inplace(work)
    for t in range(work.shape[0]):
        work[t] = abs(x[t] - med)
    return _median_inplace(work)


@njit(cache=True)
def batch_raw(block, do_mad, do_sn, do_qn):
    """Raw MAD, Sn, Qn for every row of ``block``; skipped columns are NaN."""
    reps = block.shape[0]
    out = np.full((reps, 3), np.nan)
    for r in range(reps):
        row = block[r]
        if do_mad:
            out[r, 0] = mad(row)
        if do_sn or do_qn:
            y = np.sort(row)
            if do_sn:
                out[r, 1] = sn_sorted(y)
            if do_qn:
                out[r, 2] = qn_sorted(y)
    return out
