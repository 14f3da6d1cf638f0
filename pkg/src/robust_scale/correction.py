"""Consistency constants and finite-sample bias-correction factors.

A corrected estimate is ``raw * constant * factor(n)``; the constant makes
the statistic consistent for sigma under normality as n grows, the factor
removes the remaining small-sample bias.
"""

from __future__ import annotations

import csv
import io
import json
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Mapping

from . import _tables
from .kinds import CorrectionModel, EstimatorKind

__all__ = [
    "B_INF",
    "C_INF",
    "D_INF",
    "FactorTable",
    "InversePolyTail",
    "ModelComparison",
    "asymptotic_constant",
    "compare_models",
    "factor",
    "factor_rows",
    "factor_table",
    "mad_factor",
    "normal_cdf",
    "normal_quantile",
    "published_factors",
    "solve_sn_constant",
    "write_factor_csv",
]

B_INF = 1.4826022185056
C_INF = 1.19259855312321
D_INF = 2.21914446598508


# -- normal distribution ----------------------------------------------------

_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425


def normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def _lower_quantile(p: float) -> float:
    # Acklam's rational approximation (|rel err| < 1.2e-9) for p <= 0.5,
    # then one Halley step against erfc.
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        x = (((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / (
            (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
        )
    else:
        q = p - 0.5
        r = q * q
        x = (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q / (
            ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
        )
    e = normal_cdf(x) - p
    u = e * math.sqrt(2.0 * math.pi) * math.exp(0.5 * x * x)
    return x - u / (1.0 + 0.5 * x * u)


def normal_quantile(p: float) -> float:
    """Standard normal quantile function, accurate to about 1e-15."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError("probability must lie strictly between 0 and 1")
    if p == 0.5:
        return 0.0
    if p > 0.5:
        return -_lower_quantile(1.0 - p)
    return _lower_quantile(p)


def solve_sn_constant(tol: float = 1e-12) -> float:
    """Solve Phi(q + 1/c) - Phi(q - 1/c) = 1/2 with q = Phi^-1(3/4) by bisection."""
    q = normal_quantile(0.75)

    def excess(c: float) -> float:
        return normal_cdf(q + 1.0 / c) - normal_cdf(q - 1.0 / c) - 0.5

    lo, hi = 1.0, 2.0  # excess(lo) > 0 > excess(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def asymptotic_constant(kind) -> float:
    kind = EstimatorKind.parse(kind)
    return {
        EstimatorKind.MAD: B_INF,
        EstimatorKind.SN: C_INF,
        EstimatorKind.QN: D_INF,
        EstimatorKind.SD: 1.0,
    }[kind]


# -- factor tables ------------------------------------------------------------


@dataclass(frozen=True)
class InversePolyTail:
    """``1 + alpha/n + beta/n**2`` with separate coefficients per parity."""

    alpha_odd: float
    beta_odd: float
    alpha_even: float
    beta_even: float

    def __call__(self, n: int) -> float:
        if n % 2 == 1:
            return 1.0 + self.alpha_odd / n + self.beta_odd / n**2
        return 1.0 + self.alpha_even / n + self.beta_even / n**2


def _croux_sn_tail(n: int) -> float:
    return n / (n - 0.9) if n % 2 == 1 else 1.0


def _croux_qn_tail(n: int) -> float:
    return n / (n + 1.4) if n % 2 == 1 else n / (n + 3.8)


def _robustbase_qn_tail(n: int) -> float:
    if n % 2 == 1:
        return 1.0 / (1.0 + 1.60188 / n - 2.1284 / n**2 - 5.172 / n**3)
    return 1.0 / (1.0 + 3.67561 / n + 1.9654 / n**2 + 6.987 / n**3 - 77.0 / n**4)


REFINED_SN_TAIL = InversePolyTail(0.707, -7.181, 0.043, -6.288)
REFINED_QN_TAIL = InversePolyTail(-1.594, 3.22, -3.672, 11.087)


@dataclass(frozen=True)
class FactorTable:
    """Tabulated factors for small n with an equation beyond the table."""

    estimator: EstimatorKind
    model: CorrectionModel
    entries: Mapping[int, float]
    tail: Callable[[int], float] | None = None
    max_n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "max_n", max(self.entries) if self.entries else 1)

    def __call__(self, n: int) -> float:
        n = int(n)
        if n < 2:
            raise ValueError("need at least 2 observations")
        if n in self.entries:
            return self.entries[n]
        if n > self.max_n and self.tail is not None:
            return float(self.tail(n))
        warnings.warn(
            f"no {self.model.value} {self.estimator.value} factor for n={n}; using 1.0",
            stacklevel=3,
        )
        return 1.0


def _from_n2(values) -> dict[int, float]:
    return {n: float(v) for n, v in enumerate(values, start=2)}


@lru_cache(maxsize=None)
def _mad_asset() -> dict:
    raw = resources.files("robust_scale").joinpath("data/mad_factors.json").read_text()
    return json.loads(raw)


@lru_cache(maxsize=None)
def _mad_table() -> FactorTable:
    asset = _mad_asset()
    entries = {int(n): float(row["factor"]) for n, row in asset["table"].items()}
    tail = asset.get("tail")
    return FactorTable(
        EstimatorKind.MAD,
        CorrectionModel.REFINED,
        entries,
        InversePolyTail(**tail) if tail else None,
    )


@lru_cache(maxsize=None)
def factor_table(kind, model) -> FactorTable:
    """The :class:`FactorTable` for an estimator under a correction model."""
    kind = EstimatorKind.parse(kind)
    model = CorrectionModel.parse(model)
    if model is CorrectionModel.ASYMPTOTIC or kind is EstimatorKind.SD:
        return FactorTable(kind, model, {}, lambda n: 1.0)
    if kind is EstimatorKind.MAD and model is CorrectionModel.REFINED:
        return _mad_table()
    if kind is EstimatorKind.SN:
        if model is CorrectionModel.REFINED:
            return FactorTable(kind, model, _from_n2(_tables.REFINED_SN), REFINED_SN_TAIL)
        if model is CorrectionModel.CROUX1992:
            return FactorTable(kind, model, _from_n2(_tables.CROUX1992_SN), _croux_sn_tail)
    if kind is EstimatorKind.QN:
        if model is CorrectionModel.REFINED:
            return FactorTable(kind, model, _from_n2(_tables.REFINED_QN), REFINED_QN_TAIL)
        if model is CorrectionModel.CROUX1992:
            return FactorTable(kind, model, _from_n2(_tables.CROUX1992_QN), _croux_qn_tail)
        if model is CorrectionModel.ROBUSTBASE:
            return FactorTable(kind, model, _from_n2(_tables.ROBUSTBASE_QN), _robustbase_qn_tail)
    raise ValueError(f"model not defined for estimator: {model.value} / {kind.value}")


def factor(kind, n: int, model=CorrectionModel.REFINED) -> float:
    """Finite-sample bias-correction factor for ``kind`` at sample size ``n``.

    >>> factor("qn", 2)
    0.3995
    """
    n = int(n)
    table = factor_table(kind, model)
    if n < 2:
        raise ValueError("need at least 2 observations")
    return table(n)


def mad_factor(n: int) -> float:
    """MAD factor from the locally calibrated table shipped with the package."""
    return factor(EstimatorKind.MAD, n, CorrectionModel.REFINED)


def published_factors(kind) -> dict[int, float]:
    """Refined factors exactly as published in the simulation table (n = 2..10000)."""
    kind = EstimatorKind.parse(kind)
    col = {EstimatorKind.SN: 1, EstimatorKind.QN: 2}.get(kind)
    if col is None:
        raise ValueError(f"no published factors for {kind.value}")
    return {row[0]: row[col] for row in _tables.PUBLISHED_FACTORS}


# -- model comparison ---------------------------------------------------------


@dataclass(frozen=True)
class ModelComparison:
    estimator: EstimatorKind
    model_a: CorrectionModel
    model_b: CorrectionModel
    max_abs_diff: float
    n_at_max: int
    rows: tuple  # (n, factor_a, factor_b, abs_diff)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "estimator", self.model_a.value, self.model_b.value, "abs_diff"])
        for n, fa, fb, diff in self.rows:
            writer.writerow([n, self.estimator.value, f"{fa:.6g}", f"{fb:.6g}", f"{diff:.6g}"])
        return buf.getvalue()


def compare_models(kind, model_a, model_b, n_range: Iterable[int]) -> ModelComparison:
    """Largest absolute factor difference between two models over ``n_range``.

    Ties keep the smallest n.
    """
    kind = EstimatorKind.parse(kind)
    model_a = CorrectionModel.parse(model_a)
    model_b = CorrectionModel.parse(model_b)
    ns = sorted(set(int(n) for n in n_range))
    if not ns:
        raise ValueError("empty n range")
    if ns[0] < 2:
        raise ValueError("need at least 2 observations")
    table_a = factor_table(kind, model_a)
    table_b = factor_table(kind, model_b)
    rows = []
    best, best_n = -1.0, ns[0]
    for n in ns:
        fa, fb = table_a(n), table_b(n)
        diff = abs(fa - fb)
        rows.append((n, fa, fb, diff))
        if diff > best:
            best, best_n = diff, n
    return ModelComparison(kind, model_a, model_b, best, best_n, tuple(rows))


def factor_rows(kind, model, n_values: Iterable[int]) -> list[tuple[int, float]]:
    table = factor_table(kind, model)
    return [(n, table(n)) for n in sorted(set(int(v) for v in n_values))]


def write_factor_csv(stream, kind, model, n_values: Iterable[int]) -> None:
    """Write ``n,factor,model,estimator`` rows for the given sizes."""
    kind = EstimatorKind.parse(kind)
    model = CorrectionModel.parse(model)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["n", "factor", "model", "estimator"])
    for n, value in factor_rows(kind, model, n_values):
        writer.writerow([n, f"{value:.6g}", model.value, kind.value])
