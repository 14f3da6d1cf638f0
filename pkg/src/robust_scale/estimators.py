"""Scale estimators: MAD, Sn, Qn and the unbiased standard deviation.

Raw estimators return the bare order statistic of absolute differences;
:func:`estimate` applies the consistency constant and finite-sample factor.
The ``*_naive`` functions are quadratic reference implementations that
share no code with the fast kernels.
"""

from __future__ import annotations

import math

import numpy as np

from ._backend import kernels
from .correction import asymptotic_constant, factor
from .kinds import CorrectionModel, EstimatorKind

__all__ = [
    "as_sample",
    "c4",
    "estimate",
    "mad_raw",
    "qn_fast",
    "qn_raw_naive",
    "sd_unbiased",
    "sn_fast",
    "sn_raw_naive",
]


def as_sample(x, min_size: int = 2) -> np.ndarray:
    """Validate ``x`` as a finite 1-D float64 sample of at least ``min_size``."""
    arr = np.ascontiguousarray(x, dtype=np.float64).ravel()
    if not np.all(np.isfinite(arr)):
        raise ValueError("sample contains NaN or infinite values")
    if arr.size == 0:
        raise ValueError("empty sample")
    if arr.size < min_size:
        raise ValueError(f"need at least {min_size} observations")
    return arr


def sn_raw_naive(x) -> float:
    x = as_sample(x)
    n = x.size
    diffs = np.abs(x[:, None] - x[None, :])
    himed = np.sort(diffs, axis=1)[:, n // 2]
    return float(np.sort(himed)[(n + 1) // 2 - 1])


def qn_raw_naive(x) -> float:
    x = as_sample(x)
    n = x.size
    ii, jj = np.triu_indices(n, 1)
    diffs = np.sort(np.abs(x[ii] - x[jj]))
    h = n // 2 + 1
    return float(diffs[h * (h - 1) // 2 - 1])


def sn_fast(x) -> float:
    """Raw Sn in O(n log n) time and O(n) memory."""
    return float(kernels.sn_sorted(np.sort(as_sample(x))))


def qn_fast(x) -> float:
    """Raw Qn in O(n log n) time and O(n) memory.

    Selects the k-th smallest pairwise distance, k = h(h-1)/2 with
    h = n//2 + 1, by shrinking per-row column windows of the implicit
    difference matrix of the sorted sample around weighted medians.
    """
    return float(kernels.qn_sorted(np.sort(as_sample(x))))


def mad_raw(x) -> float:
    """Median absolute deviation from the median (even n: mean of the two
    central order statistics, for both medians)."""
    return float(kernels.mad(as_sample(x)))


def c4(n: int) -> float:
    """E[s]/sigma for the n-1 divisor sample SD of n normal observations."""
    if n < 2:
        raise ValueError("need at least 2 observations")
    return math.sqrt(2.0 / (n - 1)) * math.exp(math.lgamma(n / 2) - math.lgamma((n - 1) / 2))


def sd_unbiased(x) -> float:
    x = as_sample(x)
    return float(np.std(x, ddof=1) / c4(x.size))


_RAW = {
    EstimatorKind.MAD: mad_raw,
    EstimatorKind.SN: sn_fast,
    EstimatorKind.QN: qn_fast,
}


def estimate(x, kind, model=CorrectionModel.REFINED) -> float:
    """Bias-corrected scale estimate of ``x`` (consistent for sigma under normality).

    >>> round(estimate([1.0, 2.0], "qn"), 5)
    0.88655
    """
    kind = EstimatorKind.parse(kind)
    model = CorrectionModel.parse(model)
    x = as_sample(x)
    if kind is EstimatorKind.SD:
        return sd_unbiased(x)
    scale = asymptotic_constant(kind) * factor(kind, x.size, model)
    return _RAW[kind](x) * scale
