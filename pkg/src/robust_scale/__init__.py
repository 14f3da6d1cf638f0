"""Robust scale estimation with refined finite-sample corrections."""

from ._backend import BACKEND
from .correction import B_INF, C_INF, D_INF, factor, mad_factor
from .estimators import (
    estimate,
    mad_raw,
    qn_fast,
    qn_raw_naive,
    sd_unbiased,
    sn_fast,
    sn_raw_naive,
)
from .kinds import CorrectionModel, EstimatorKind
from .order_stats import high_median, low_median, select_kth, weighted_high_median

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "B_INF",
    "C_INF",
    "CorrectionModel",
    "D_INF",
    "EstimatorKind",
    "estimate",
    "factor",
    "high_median",
    "low_median",
    "mad_factor",
    "mad_raw",
    "qn_fast",
    "qn_raw_naive",
    "sd_unbiased",
    "select_kth",
    "sn_fast",
    "sn_raw_naive",
    "weighted_high_median",
]
