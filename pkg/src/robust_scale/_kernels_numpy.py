"""Pure-numpy fallback kernels.

Same contracts and results as ``_kernels_numba``.  Loops run over
bisection steps rather than over observations, so every step is one
vectorised pass.  Batched Qn for small samples partitions the explicit
pair differences instead of running the implicit search per row, which
is far faster in numpy for n below a few hundred and yields the same
order statistic.
"""

from __future__ import annotations

import numpy as np

# Upper bound on pair differences materialised at once by ``batch_raw``.
_PAIR_BUDGET = 1 << 22
_BATCH_PAIRWISE_MAX_N = 512


def select_kth(values, k):
    return float(np.partition(values, k)[k])


def weighted_high_median(values, weights):
    """Smallest v with 2 * (weight of values <= v) > total weight.

    Splits around the unweighted median and keeps the side holding the
    answer, so the work shrinks geometrically; small remainders are sorted.
    """
    a = np.asarray(values, dtype=np.float64)
    w = np.asarray(weights, dtype=np.int64)
    total = int(w.sum())
    wrest = 0  # weight known to lie below every remaining candidate
    while a.size > 64:
        trial = np.partition(a, a.size // 2)[a.size // 2]
        lower = a < trial
        wleft = int(w[lower].sum())
        if 2 * (wrest + wleft) > total:
            a, w = a[lower], w[lower]
            continue
        wmid = int(w[a == trial].sum())
        if 2 * (wrest + wleft + wmid) > total:
            return float(trial)
        upper = a > trial
        a, w = a[upper], w[upper]
        wrest += wleft + wmid
    order = np.argsort(a, kind="stable")
    cum = wrest + np.cumsum(w[order])
    return float(a[order[int(np.argmax(2 * cum > total))]])


def _sn_rows(ys):
    """Per-row Sn of a 2-D array whose rows are sorted ascending."""
    reps, n = ys.shape
    r = n // 2
    i = np.arange(n)
    lo = np.broadcast_to(np.maximum(0, r - (n - 1 - i)), (reps, n)).copy()
    hi = np.broadcast_to(np.minimum(r, i), (reps, n)).copy()
    while True:
        active = lo < hi
        if not active.any():
            break
        a = (lo + hi) // 2
        b = r - a
        right = np.take_along_axis(ys, np.minimum(i + b, n - 1), axis=1) - ys
        left = ys - np.take_along_axis(ys, np.maximum(i - 1 - a, 0), axis=1)
        go_left = right <= left
        hi = np.where(active & go_left, a, hi)
        lo = np.where(active & ~go_left, a + 1, lo)
    a = lo
    b = r - a
    from_left = np.where(a > 0, ys - np.take_along_axis(ys, np.maximum(i - a, 0), axis=1), 0.0)
    from_right = np.where(b > 0, np.take_along_axis(ys, np.minimum(i + b, n - 1), axis=1) - ys, 0.0)
    himed = np.maximum(from_left, from_right)
    rank = (n + 1) // 2 - 1
    return np.partition(himed, rank, axis=1)[:, rank]


def sn_sorted(y):
    return float(_sn_rows(np.asarray(y, dtype=np.float64)[None, :])[0])


def _first_at_least(y, rows, lo, hi, trial, strict):
    """For each row i, the first column j in [lo, hi] with y_j - y_i >= trial
    (``strict``) or > trial; ``hi`` means none inside the window."""
    n = y.shape[0]
    lo = lo.copy()
    hi = hi.copy()
    while True:
        active = lo < hi
        if not active.any():
            return lo
        mid = (lo + hi) // 2
        diff = y[np.minimum(mid, n - 1)] - y[rows]
        below = diff < trial if strict else diff <= trial
        lo = np.where(active & below, mid + 1, lo)
        hi = np.where(active & ~below, mid, hi)


def _boundary(y, rows, left, right, trial, strict):
    """``_first_at_least`` over each row's window [left, right + 1].

    ``searchsorted`` on ``y_i + trial`` lands on the boundary except where
    rounding separates ``y_j - y_i < trial`` from ``y_j < y_i + trial``; the
    exact predicate is checked on both sides and only failing rows are
    bisected.  Rounding is monotone, so the two-sided check is sufficient.
    """
    n = y.shape[0]
    hi = right + 1
    j = np.searchsorted(y, y[rows] + trial, side="left" if strict else "right")
    j = np.clip(j, left, hi)

    def below(col):
        diff = y[np.minimum(col, n - 1)] - y[rows]
        return diff < trial if strict else diff <= trial

    ok = ((j == left) | below(j - 1)) & ((j == hi) | ~below(j))
    if not ok.all():
        bad = ~ok
        j[bad] = _first_at_least(y, rows[bad], left[bad], hi[bad], trial, strict)
    return j


def qn_sorted(y):
    y = np.asarray(y, dtype=np.float64)
    n = y.shape[0]
    h = n // 2 + 1
    k = h * (h - 1) // 2
    rows = np.arange(n)
    left = rows + 1
    right = np.full(n, n - 1)
    ncand = n * (n - 1) // 2
    below = 0
    while ncand > n:
        active = left <= right
        ia = rows[active]
        mid = (left[active] + right[active]) // 2
        trial = weighted_high_median(y[mid] - y[ia], right[active] - left[active] + 1)
        # The boundary for each row lies inside its current window.
        p_end = _boundary(y, rows, left, right, trial, strict=True)
        # q_end differs from p_end only on rows with a difference equal to trial
        q_end = p_end.copy()
        tied = (p_end <= right) & (y[np.minimum(p_end, n - 1)] - y == trial)
        if tied.any():
            q_end[tied] = _first_at_least(y, rows[tied], p_end[tied], right[tied] + 1, trial, strict=False)
        sum_p = below + int(np.sum(p_end - left))
        sum_q = below + int(np.sum(q_end - left))
        if k <= sum_p:
            right = np.minimum(right, p_end - 1)
        elif k > sum_q:
            left = np.maximum(left, q_end)
        else:
            return float(trial)
        ncand = int(np.sum(np.maximum(right - left + 1, 0)))
        below = int(np.sum(left - (rows + 1)))
    lengths = np.maximum(right - left + 1, 0)
    owner = np.repeat(rows, lengths)
    offsets = np.arange(ncand) - np.repeat(np.cumsum(lengths) - lengths, lengths)
    cand = y[left[owner] + offsets] - y[owner]
    return select_kth(cand, k - below - 1)


def mad(x):
    x = np.asarray(x, dtype=np.float64)
    return float(np.median(np.abs(x - np.median(x))))


def _qn_rows_pairwise(ys):
    n = ys.shape[1]
    h = n // 2 + 1
    k = h * (h - 1) // 2
    ii, jj = np.triu_indices(n, 1)
    out = np.empty(ys.shape[0])
    step = max(1, _PAIR_BUDGET // max(ii.size, 1))
    for start in range(0, ys.shape[0], step):
        chunk = ys[start : start + step]
        diffs = chunk[:, jj] - chunk[:, ii]
        out[start : start + step] = np.partition(diffs, k - 1, axis=1)[:, k - 1]
    return out


def batch_raw(block, do_mad, do_sn, do_qn):
    reps, n = block.shape
    out = np.full((reps, 3), np.nan)
    if do_mad:
        med = np.median(block, axis=1, keepdims=True)
        out[:, 0] = np.median(np.abs(block - med), axis=1)
    if do_sn or do_qn:
        ys = np.sort(block, axis=1)
        if do_sn:
            out[:, 1] = _sn_rows(ys)
        if do_qn:
            if n <= _BATCH_PAIRWISE_MAX_N:
                out[:, 2] = _qn_rows_pairwise(ys)
            else:
                out[:, 2] = [qn_sorted(row) for row in ys]
    return out
