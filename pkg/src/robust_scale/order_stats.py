"""Order-statistic selection: k-th smallest, low/high median, weighted high
median.  Ranks are 1-based throughout the public API."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels

__all__ = [
    "WeightedValue",
    "high_median",
    "low_median",
    "select_kth",
    "weighted_high_median",
]


def _finite_array(values) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("empty sample")
    if not np.all(np.isfinite(arr)):
        raise ValueError("sample contains NaN or infinite values")
    return arr


def select_kth(values, k: int) -> float:
    """Return the k-th smallest value (1-based, duplicates counted).

    The input is copied; callers' arrays are never reordered.
    """
    arr = _finite_array(values)
    k = int(k)
    if not 1 <= k <= arr.size:
        raise ValueError("rank out of range")
    return float(kernels.select_kth(arr, k - 1))


def low_median(values) -> float:
    arr = _finite_array(values)
    return float(kernels.select_kth(arr, (arr.size + 1) // 2 - 1))


def high_median(values) -> float:
    arr = _finite_array(values)
    return float(kernels.select_kth(arr, arr.size // 2))


class WeightedValue(tuple):
    """A ``(value, weight)`` pair with a positive integer weight."""

    __slots__ = ()

    def __new__(cls, value: float, weight: int = 1):
        return super().__new__(cls, (float(value), int(weight)))

    @property
    def value(self) -> float:
        return self[0]

    @property
    def weight(self) -> int:
        return self[1]


def weighted_high_median(
    items: Iterable[Sequence[float]] | None = None,
    *,
    values=None,
    weights=None,
) -> float:
    """High median of the multiset where each value appears ``weight`` times.

    That is the smallest ``v`` whose cumulative weight exceeds half the
    total.  Pass either ``(value, weight)`` pairs or the two arrays as
    keywords.

    >>> weighted_high_median([(1, 1), (2, 1), (3, 1), (4, 1)])
    3.0
    """
    if items is not None:
        pairs = list(items)
        if not pairs:
            raise ValueError("empty sample")
        values = [p[0] for p in pairs]
        weights = [p[1] for p in pairs]
    vals = _finite_array(values)
    w = np.asarray(weights)
    if w.shape != vals.shape:
        raise ValueError("values and weights differ in length")
    if not np.issubdtype(w.dtype, np.integer):
        if not np.all(np.mod(w, 1) == 0):
            raise ValueError("weights must be integers")
    w = w.astype(np.int64)
    if np.any(w < 1):
        raise ValueError("weights must be positive")
    return float(kernels.weighted_high_median(vals, w))
