"""Kernel backend selection.

The hot loops (selection, Sn/Qn on sorted data, per-replicate estimator
batches) exist twice: numba-compiled in ``_kernels_numba`` and vectorised
pure numpy in ``_kernels_numpy``.  Both return identical values for the
same input.  Set ``ROBUST_SCALE_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

ENV_FLAG = "ROBUST_SCALE_DISABLE_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() not in {"1", "true", "yes", "on"}


try:
    import numba  # noqa: F401

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and _numba_requested()

if USE_NUMBA:
    from . import _kernels_numba as kernels
else:
    from . import _kernels_numpy as kernels

BACKEND = "numba" if USE_NUMBA else "numpy"

__all__ = ["BACKEND", "ENV_FLAG", "NUMBA_AVAILABLE", "USE_NUMBA", "kernels"]
