"""Least-squares fit of the factor decay model ``1 + alpha/n + beta/n**2``."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable, Mapping

import numpy as np

__all__ = ["FitResult", "fit_inverse_poly", "predict", "prediction_error"]

PARITIES = ("odd", "even")


@dataclass(frozen=True)
class FitResult:
    alpha: float
    beta: float
    parity: str
    residual_rms: float
    n_points: int

    def __call__(self, n) -> float:
        return predict(self.alpha, self.beta, n)

    def to_dict(self) -> dict:
        return asdict(self)


def predict(alpha: float, beta: float, n):
    n = np.asarray(n, dtype=np.float64)
    return 1.0 + alpha / n + beta / (n * n)


def _parity_ok(n: int, parity: str | None) -> bool:
    if parity is None:
        return True
    return (n % 2 == 1) == (parity == "odd")


def fit_inverse_poly(points: Iterable[tuple[int, float]], parity: str | None) -> FitResult:
    """Unweighted least squares of ``factor - 1`` on ``(1/n, 1/n**2)``.

    ``parity`` is ``"odd"``, ``"even"`` or ``None`` (keep every point).
    The 2x2 problem is solved in closed form through a thin QR of the design
    after scaling both regressors to unit norm.
    """
    if parity is not None and parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")
    kept = [(int(n), float(f)) for n, f in points if _parity_ok(int(n), parity)]
    if len(kept) < 2:
        raise ValueError("underdetermined fit")
    ns = np.array([p[0] for p in kept], dtype=np.float64)
    if np.any(ns <= 0):
        raise ValueError("sample sizes must be positive")
    if np.unique(ns).size < 2:
        raise ValueError("singular design: all n equal")
    y = np.array([p[1] for p in kept]) - 1.0
    u = 1.0 / ns
    v = u * u
    su, sv = np.linalg.norm(u), np.linalg.norm(v)
    a, b = u / su, v / sv
    # Thin QR by Gram-Schmidt with one reorthogonalization pass; solving
    # R c = Q^T y avoids squaring the condition number as G c = A^T y would.
    r12 = a @ b
    q2 = b - r12 * a
    corr = a @ q2
    q2 -= corr * a
    r12 += corr
    r22 = np.linalg.norm(q2)
    if r22 <= 1e-7:
        raise ValueError("singular design")
    q2 /= r22
    c2 = (q2 @ y) / r22
    c1 = a @ y - r12 * c2
    alpha, beta = c1 / su, c2 / sv
    resid = y - alpha * u - beta * v
    rms = float(math.sqrt(np.mean(resid * resid)))
    return FitResult(float(alpha), float(beta), parity or "all", rms, len(kept))


def prediction_error(table: Mapping[int, float], fit: FitResult, n_range: Iterable[int]):
    """Largest ``|table[n] - fit(n)|`` over tabulated n in ``n_range`` whose
    parity matches the fit.  Returns ``(max_abs_diff, n_at_max)``; n is None
    when nothing was scanned."""
    parity = fit.parity if fit.parity in PARITIES else None
    best, best_n = 0.0, None
    for n in sorted(set(int(v) for v in n_range)):
        if n not in table or not _parity_ok(n, parity):
            continue
        diff = abs(float(table[n]) - float(fit(n)))
        if best_n is None or diff > best:
            best, best_n = diff, n
    return best, best_n
