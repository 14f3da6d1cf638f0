"""Deterministic Monte-Carlo engine for factor calibration and Gaussian
efficiency studies.

Reproducibility
---------------
Repetitions for each sample size are cut into fixed-size shards.  Shard
``s`` of size ``n`` in study ``t`` draws from its own Philox stream keyed by
``SeedSequence(seed, spawn_key=(t, n, s))``, and normals come from numpy's
``Generator.standard_normal`` (ziggurat).  Shards are merged in index
order, so the output depends on ``(seed, config)`` only, never on the
number of worker processes.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

import numpy as np

from ._backend import kernels
from .correction import asymptotic_constant, factor
from .estimators import c4
from .kinds import CorrectionModel, EstimatorKind

__all__ = [
    "EFFICIENCY_COLUMNS",
    "EfficiencyRow",
    "MOMENT_COLUMNS",
    "Moments",
    "SimulationConfig",
    "SimulationResult",
    "calibrate_factor",
    "efficiency_run",
    "run_study",
    "sample_normal",
    "standardized_variance",
    "substream",
]

FACTOR_STUDY = "factors"
EFFICIENCY_STUDY = "efficiency"
_STUDY_TAG = {FACTOR_STUDY: 0, EFFICIENCY_STUDY: 1}

MIN_REPETITIONS = 100
DEFAULT_SHARD_SIZE = 5000
# Normals generated per block inside a shard.
_BLOCK_VALUES = 1 << 18

_RAW_COLUMN = {EstimatorKind.MAD: 0, EstimatorKind.SN: 1, EstimatorKind.QN: 2}
_EFFICIENCY_KINDS = (EstimatorKind.SD, EstimatorKind.MAD, EstimatorKind.SN, EstimatorKind.QN)


def substream(seed: int, n: int, shard: int, study: str = FACTOR_STUDY) -> np.random.Generator:
    ss = np.random.SeedSequence(int(seed), spawn_key=(_STUDY_TAG[study], int(n), int(shard)))
    return np.random.Generator(np.random.Philox(ss))


def sample_normal(n: int, stream: np.random.Generator) -> np.ndarray:
    if n < 1:
        raise ValueError("sample size must be at least 1")
    return stream.standard_normal(n)


@dataclass(frozen=True)
class Moments:
    """Count, mean and sum of squared deviations of a batch of values."""

    count: int
    mean: float
    m2: float

    @classmethod
    def of(cls, values: np.ndarray) -> "Moments":
        mean = float(np.mean(values))
        return cls(int(values.size), mean, float(np.sum((values - mean) ** 2)))

    def merge(self, other: "Moments") -> "Moments":
        if self.count == 0:
            return other
        if other.count == 0:
            return self
        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * other.count / total
        m2 = self.m2 + other.m2 + delta * delta * self.count * other.count / total
        return Moments(total, mean, m2)

    def remove(self, part: "Moments") -> "Moments":
        """Inverse of :meth:`merge`: the moments of ``self`` without ``part``."""
        rest = self.count - part.count
        mean = (self.count * self.mean - part.count * part.mean) / rest
        delta = part.mean - mean
        m2 = self.m2 - part.m2 - delta * delta * part.count * rest / self.count
        return Moments(rest, mean, max(m2, 0.0))

    @property
    def variance(self) -> float:
        return self.m2 / (self.count - 1)


def standardized_variance(mean: float, variance: float, n: int) -> float:
    """``n * variance / mean**2``: a variance measure free of the estimator's scale."""
    if mean == 0:
        raise ValueError("degenerate estimator distribution")
    if variance < 0:
        raise ValueError("variance must be nonnegative")
    return n * variance / (mean * mean)


@dataclass(frozen=True)
class SimulationConfig:
    n_values: Sequence[int]
    repetitions: int = 100_000
    seed: int = 0
    estimators: Sequence[EstimatorKind] = (EstimatorKind.SN, EstimatorKind.QN)
    workers: int = 1
    shard_size: int = DEFAULT_SHARD_SIZE

    def __post_init__(self):
        ns = tuple(sorted(set(int(n) for n in self.n_values)))
        if ns and ns[0] < 2:
            raise ValueError("sample sizes must be at least 2")
        if self.repetitions < MIN_REPETITIONS:
            raise ValueError(f"repetitions must be at least {MIN_REPETITIONS}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.workers < 1 or self.shard_size < 1:
            raise ValueError("workers and shard_size must be positive")
        kinds = tuple(dict.fromkeys(EstimatorKind.parse(k) for k in self.estimators))
        object.__setattr__(self, "n_values", ns)
        object.__setattr__(self, "estimators", kinds)
        object.__setattr__(self, "seed", int(self.seed))

    def shards(self) -> list[int]:
        full, rest = divmod(self.repetitions, self.shard_size)
        return [self.shard_size] * full + ([rest] if rest else [])


@dataclass(frozen=True)
class SimulationResult:
    n: int
    kind: EstimatorKind
    mean: float
    variance: float
    std_variance: float
    count: int
    seed: int
    factor: float
    se: float


@dataclass(frozen=True)
class EfficiencyRow:
    n: int
    e_mad: float
    e_sn: float
    e_qn: float
    se_mad: float = math.nan
    se_sn: float = math.nan
    se_qn: float = math.nan
    reps: int = 0
    seed: int = 0


MOMENT_COLUMNS = ("n", "estimator", "mean", "variance", "std_variance", "factor", "se")
EFFICIENCY_COLUMNS = ("n", "e_mad", "e_sn", "e_qn", "se_mad", "se_sn", "se_qn")


def moment_fields(row: SimulationResult) -> list[str]:
    return [
        str(row.n), row.kind.value, f"{row.mean:.10g}", f"{row.variance:.10g}",
        f"{row.std_variance:.10g}", f"{row.factor:.6g}", f"{row.se:.3g}",
    ]


def efficiency_fields(row: EfficiencyRow) -> list[str]:
    return [
        str(row.n), f"{row.e_mad:.6g}", f"{row.e_sn:.6g}", f"{row.e_qn:.6g}",
        f"{row.se_mad:.3g}", f"{row.se_sn:.3g}", f"{row.se_qn:.3g}",
    ]


def write_moments_csv(stream, rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(MOMENT_COLUMNS)
    for row in rows:
        writer.writerow(moment_fields(row))


def write_efficiency_csv(stream, rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(EFFICIENCY_COLUMNS)
    for row in rows:
        writer.writerow(efficiency_fields(row))


# -- shard execution ----------------------------------------------------------


@dataclass(frozen=True)
class _ShardTask:
    study: str
    seed: int
    n: int
    index: int
    count: int
    kinds: tuple
    scale: tuple = field(default=())  # per-kind multipliers, efficiency only


def _shard_values(task: _ShardTask) -> dict:
    rng = substream(task.seed, task.n, task.index, task.study)
    n = task.n
    rows_per_block = max(1, _BLOCK_VALUES // n)
    want = set(task.kinds)
    chunks: dict = {k: [] for k in task.kinds}
    done = 0
    while done < task.count:
        rows = min(rows_per_block, task.count - done)
        block = rng.standard_normal((rows, n))
        raw = kernels.batch_raw(
            block,
            EstimatorKind.MAD in want,
            EstimatorKind.SN in want,
            EstimatorKind.QN in want,
        )
        for kind in task.kinds:
            if kind is EstimatorKind.SD:
                chunks[kind].append(np.std(block, axis=1, ddof=1))
            else:
                chunks[kind].append(raw[:, _RAW_COLUMN[kind]])
        done += rows
    return {k: np.concatenate(v) for k, v in chunks.items()}


def _run_shard(task: _ShardTask) -> dict:
    values = _shard_values(task)
    scale = dict(task.scale)
    return {k: Moments.of(v * scale[k] if k in scale else v) for k, v in values.items()}


class _Runner:
    """Maps shard tasks to results in submission order, optionally on a
    process pool."""

    def __init__(self, workers: int):
        self.workers = workers
        self._pool = ProcessPoolExecutor(workers) if workers > 1 else None

    def map(self, tasks):
        if self._pool is None:
            return [_run_shard(t) for t in tasks]
        return list(self._pool.map(_run_shard, tasks))

    def close(self):
        if self._pool is not None:
            self._pool.shutdown(cancel_futures=True)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def _merge_all(parts: list[dict], kinds) -> dict:
    total = {}
    for kind in kinds:
        acc = Moments(0, 0.0, 0.0)
        for part in parts:
            acc = acc.merge(part[kind])
        total[kind] = acc
    return total


def _factor_results(config: SimulationConfig, n: int, parts: list[dict]) -> list[SimulationResult]:
    out = []
    merged = _merge_all(parts, config.estimators)
    for kind in config.estimators:
        m = merged[kind]
        const = asymptotic_constant(kind)
        var = m.variance
        fac = 1.0 / (m.mean * const)
        se = math.sqrt(var / m.count) / (m.mean * m.mean * const)
        out.append(
            SimulationResult(
                n=n, kind=kind, mean=m.mean, variance=var,
                std_variance=standardized_variance(m.mean, var, n),
                count=m.count, seed=config.seed, factor=fac, se=se,
            )
        )
    return out


def _efficiencies(moments: Mapping, n: int) -> tuple:
    def vs(kind):
        m = moments[kind]
        return standardized_variance(m.mean, m.variance, n)

    base = vs(EstimatorKind.SD)
    return tuple(base / vs(k) for k in _EFFICIENCY_KINDS[1:])


def _efficiency_row(config: SimulationConfig, n: int, parts: list[dict]) -> EfficiencyRow:
    merged = _merge_all(parts, _EFFICIENCY_KINDS)
    point = _efficiencies(merged, n)
    groups = len(parts)
    if groups >= 2:
        # Delete-one-shard jackknife.
        loo = np.array(
            [
                _efficiencies({k: merged[k].remove(part[k]) for k in _EFFICIENCY_KINDS}, n)
                for part in parts
            ]
        )
        spread = np.sum((loo - loo.mean(axis=0)) ** 2, axis=0)
        se = tuple(float(v) for v in np.sqrt((groups - 1) / groups * spread))
    else:
        se = (math.nan,) * 3
    return EfficiencyRow(n, *point, *se, reps=config.repetitions, seed=config.seed)


def _efficiency_scale(n: int, extra: Mapping | None) -> tuple:
    scale = {EstimatorKind.SD: 1.0 / c4(n)}
    for kind in _EFFICIENCY_KINDS[1:]:
        scale[kind] = asymptotic_constant(kind) * factor(kind, n, CorrectionModel.REFINED)
    for kind, mult in (extra or {}).items():
        scale[EstimatorKind.parse(kind)] *= mult
    return tuple(scale.items())


def run_study(
    config: SimulationConfig,
    study: str = FACTOR_STUDY,
    *,
    progress: Callable[[str], None] | None = None,
    efficiency_scale: Mapping | None = None,
) -> Iterator:
    """Yield result rows in ascending n.

    ``factors`` yields one :class:`SimulationResult` per (n, estimator);
    ``efficiency`` yields one :class:`EfficiencyRow` per n.
    """
    if study not in _STUDY_TAG:
        raise ValueError(f"unknown study {study!r}")
    if study == FACTOR_STUDY and EstimatorKind.SD in config.estimators:
        raise ValueError("SD needs no calibration")
    kinds = config.estimators if study == FACTOR_STUDY else _EFFICIENCY_KINDS
    sizes = config.shards()
    with _Runner(config.workers) as runner:
        for n in config.n_values:
            scale = _efficiency_scale(n, efficiency_scale) if study == EFFICIENCY_STUDY else ()
            tasks = [
                _ShardTask(study, config.seed, n, i, count, tuple(kinds), scale)
                for i, count in enumerate(sizes)
            ]
            parts = runner.map(tasks)
            if progress is not None:
                progress(f"{study}: n={n} done ({config.repetitions} repetitions)")
            if study == FACTOR_STUDY:
                yield from _factor_results(config, n, parts)
            else:
                yield _efficiency_row(config, n, parts)


def calibrate_factor(kind, n: int, reps: int, seed: int = 0, *, workers: int = 1,
                     shard_size: int = DEFAULT_SHARD_SIZE) -> tuple[float, float]:
    """Monte-Carlo factor ``1 / (E[raw] * constant)`` and its standard error."""
    kind = EstimatorKind.parse(kind)
    if kind is EstimatorKind.SD:
        raise ValueError("SD needs no calibration")
    if n < 2:
        raise ValueError("need at least 2 observations")
    config = SimulationConfig((n,), reps, seed, (kind,), workers, shard_size)
    (result,) = run_study(config, FACTOR_STUDY)
    return result.factor, result.se


def efficiency_run(n: int, reps: int, seed: int = 0, *, workers: int = 1,
                   shard_size: int = DEFAULT_SHARD_SIZE,
                   scale: Mapping | None = None) -> EfficiencyRow:
    """Finite-sample Gaussian efficiency of MAD, Sn and Qn against SD at size n.

    All four estimators see the same samples.  ``scale`` multiplies the
    named estimators' constants; the result does not depend on it.
    """
    config = SimulationConfig((n,), reps, seed, (), workers, shard_size)
    (row,) = run_study(config, EFFICIENCY_STUDY, efficiency_scale=scale)
    return row
