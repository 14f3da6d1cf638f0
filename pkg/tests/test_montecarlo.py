import io
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from robust_scale import EstimatorKind
from robust_scale.correction import B_INF, C_INF, D_INF
from robust_scale.estimators import c4, mad_raw, qn_fast, sn_fast
from robust_scale.montecarlo import (
    Moments,
    SimulationConfig,
    calibrate_factor,
    efficiency_run,
    run_study,
    sample_normal,
    standardized_variance,
    substream,
    write_efficiency_csv,
    write_moments_csv,
)

SQRT_PI = math.sqrt(math.pi)


def test_substream_is_reproducible():
    a = sample_normal(50, substream(7, 10, 3))
    b = sample_normal(50, substream(7, 10, 3))
    assert np.array_equal(a, b)


@pytest.mark.parametrize(
    "other", [(8, 10, 3, "factors"), (7, 11, 3, "factors"), (7, 10, 4, "factors"), (7, 10, 3, "efficiency")]
)
def test_substreams_share_no_prefix(other):
    base = sample_normal(100, substream(7, 10, 3, "factors"))
    alt = sample_normal(100, substream(*other))
    assert not np.any(base == alt)


def test_sample_normal_bad_size():
    with pytest.raises(ValueError):
        sample_normal(0, substream(0, 2, 0))


def test_normal_deviates_clt():
    x = sample_normal(1_000_000, substream(123, 1, 0))
    assert abs(x.mean()) < 4 / math.sqrt(1e6)
    assert abs(x.var(ddof=1) - 1) < 0.01


def test_moment_merge_matches_single_pass():
    rng = np.random.default_rng(4)
    data = rng.gamma(2.0, size=10_007) + 50
    pieces = np.array_split(data, [13, 2000, 2001, 7000])
    acc = Moments(0, 0.0, 0.0)
    for p in pieces:
        acc = acc.merge(Moments.of(p))
    assert acc.count == data.size
    assert acc.mean == pytest.approx(data.mean(), rel=1e-12)
    assert acc.variance == pytest.approx(data.var(ddof=1), rel=1e-12)


@given(st.lists(st.floats(-1e3, 1e3), min_size=3, max_size=80), st.data())
def test_moment_remove_inverts_merge(values, data):
    cut = data.draw(st.integers(1, len(values) - 2))
    a, b = np.array(values[:cut]), np.array(values[cut:])
    whole = Moments.of(a).merge(Moments.of(b))
    rest = whole.remove(Moments.of(b))
    assert rest.count == a.size
    scale = max(1.0, float(np.max(np.abs(values))))
    assert rest.mean == pytest.approx(a.mean(), abs=1e-9 * scale)
    assert rest.m2 == pytest.approx(Moments.of(a).m2, abs=1e-7 * scale**2)


def test_standardized_variance():
    assert standardized_variance(1.0, 0.5, 10) == 5
    for s in (0.01, 3.0, 1e4):
        assert standardized_variance(s * 2.0, s * s * 0.3, 7) == pytest.approx(
            standardized_variance(2.0, 0.3, 7), rel=1e-14
        )
    with pytest.raises(ValueError, match="degenerate estimator distribution"):
        standardized_variance(0.0, 1.0, 5)
    with pytest.raises(ValueError):
        standardized_variance(1.0, -1.0, 5)


def test_sd_standardized_variance_at_two():
    # s = |x1 - x2| / sqrt(2) and E[s^2] = 1, so V_s = 2 (1 - c4^2) / c4^2 = pi - 2
    closed = 2 * (1 - c4(2) ** 2) / c4(2) ** 2
    assert closed == pytest.approx(math.pi - 2, rel=1e-14)
    rng = substream(99, 2, 0)
    block = rng.standard_normal((400_000, 2))
    sd = np.std(block, axis=1, ddof=1) / c4(2)
    m = Moments.of(sd)
    assert standardized_variance(m.mean, m.variance, 2) == pytest.approx(closed, abs=0.02)


def test_config_validation():
    with pytest.raises(ValueError):
        SimulationConfig((1, 5))
    with pytest.raises(ValueError):
        SimulationConfig((5,), repetitions=99)
    with pytest.raises(ValueError):
        SimulationConfig((5,), seed=-1)
    with pytest.raises(ValueError):
        SimulationConfig((5,), seed=2**64)
    with pytest.raises(ValueError):
        SimulationConfig((5,), workers=0)
    cfg = SimulationConfig([9, 3, 3], repetitions=12_001, shard_size=5000)
    assert cfg.n_values == (3, 9)
    assert cfg.shards() == [5000, 5000, 2001]


def test_sd_cannot_be_calibrated():
    with pytest.raises(ValueError, match="SD needs no calibration"):
        calibrate_factor("sd", 5, 1000)
    with pytest.raises(ValueError, match="SD needs no calibration"):
        list(run_study(SimulationConfig((5,), 1000, estimators=("sd",))))


def test_unknown_study():
    with pytest.raises(ValueError):
        list(run_study(SimulationConfig((5,), 1000), "bogus"))


def test_empty_n_list_yields_nothing():
    assert list(run_study(SimulationConfig((), 1000))) == []
    assert list(run_study(SimulationConfig((), 1000), "efficiency")) == []


def test_results_count_and_fields():
    (sn, qn) = run_study(SimulationConfig((6,), 3000, seed=5, shard_size=1000))
    assert (sn.kind, qn.kind) == (EstimatorKind.SN, EstimatorKind.QN)
    for r in (sn, qn):
        assert r.count == 3000 and r.seed == 5 and r.n == 6
        assert r.variance >= 0
        assert r.std_variance == pytest.approx(6 * r.variance / r.mean**2, rel=1e-14)
        assert r.factor == pytest.approx(1 / (r.mean * (C_INF if r.kind is EstimatorKind.SN else D_INF)))


def test_factor_matches_direct_loop():
    # independent of batching: recompute raw estimates one sample at a time
    n, reps, seed = 5, 700, 31
    (mad, sn, qn) = run_study(SimulationConfig((n,), reps, seed, ("mad", "sn", "qn"), shard_size=300))
    raws = {"mad": [], "sn": [], "qn": []}
    for shard, count in enumerate([300, 300, 100]):
        rng = substream(seed, n, shard)
        block = rng.standard_normal((count, n))
        for row in block:
            raws["mad"].append(mad_raw(row))
            raws["sn"].append(sn_fast(row))
            raws["qn"].append(qn_fast(row))
    for res, key in ((mad, "mad"), (sn, "sn"), (qn, "qn")):
        assert res.mean == pytest.approx(np.mean(raws[key]), rel=1e-12)
        assert res.variance == pytest.approx(np.var(raws[key], ddof=1), rel=1e-10)


@pytest.mark.parametrize(
    "kind,closed",
    [("qn", SQRT_PI / (2 * D_INF)), ("sn", SQRT_PI / (2 * C_INF)), ("mad", SQRT_PI / B_INF)],
)
def test_calibration_closed_form_at_two(kind, closed):
    fac, se = calibrate_factor(kind, 2, 200_000, seed=3)
    assert abs(fac - closed) <= 3 * se


def test_calibration_small_sizes():
    fac, se = calibrate_factor("sn", 3, 100_000, seed=8)
    assert fac == pytest.approx(1.8493, abs=0.01)
    assert 0 < se < 0.01


def test_odd_even_pattern_qn():
    rows = run_study(SimulationConfig(range(2, 21), 5000, seed=17, estimators=("qn",)))
    d = {r.n: r.factor for r in rows}
    for n in range(3, 20, 2):
        assert d[n] > d[n - 1] and d[n] > d[n + 1]


def test_workers_do_not_change_results():
    cfg1 = SimulationConfig((3, 8), 2500, seed=11, estimators=("mad", "sn", "qn"), shard_size=600)
    cfg2 = SimulationConfig((3, 8), 2500, seed=11, estimators=("mad", "sn", "qn"), shard_size=600, workers=2)
    assert list(run_study(cfg1)) == list(run_study(cfg2))
    assert list(run_study(cfg1, "efficiency")) == list(run_study(cfg2, "efficiency"))


def test_efficiency_n2_all_one():
    row = efficiency_run(2, 20_000, seed=2, shard_size=2000)
    # every estimator is proportional to |x1 - x2| at n = 2
    for e in (row.e_mad, row.e_sn, row.e_qn):
        assert e == pytest.approx(1.0, abs=1e-9)


def test_efficiency_invariant_to_constants():
    base = efficiency_run(9, 4000, seed=6, shard_size=1000)
    bent = efficiency_run(9, 4000, seed=6, shard_size=1000, scale={"qn": 3.7, "mad": 0.01, "sn": 1e3, "sd": 2.5})
    for a, b in zip(
        (base.e_mad, base.e_sn, base.e_qn, base.se_mad, base.se_sn, base.se_qn),
        (bent.e_mad, bent.e_sn, bent.e_qn, bent.se_mad, bent.se_sn, bent.se_qn),
    ):
        assert abs(a - b) <= 1e-12 * abs(a)


@pytest.mark.parametrize("n", [4, 10, 25])
def test_efficiency_ordering(n):
    row = efficiency_run(n, 40_000, seed=n, shard_size=4000)
    assert row.e_qn - row.e_sn > -3 * math.hypot(row.se_qn, row.se_sn)
    assert row.e_sn - row.e_mad > -3 * math.hypot(row.se_sn, row.se_mad)
    assert all(0 < e <= 1.0 + 3 * s for e, s in ((row.e_mad, row.se_mad), (row.e_sn, row.se_sn), (row.e_qn, row.se_qn)))


def test_single_shard_has_no_se():
    row = efficiency_run(5, 500, seed=1, shard_size=5000)
    assert math.isnan(row.se_qn)


def test_csv_writers():
    rows = list(run_study(SimulationConfig((4,), 200, seed=1, estimators=("qn",))))
    buf = io.StringIO()
    write_moments_csv(buf, rows)
    head, line = buf.getvalue().splitlines()
    assert head == "n,estimator,mean,variance,std_variance,factor,se"
    assert line.startswith("4,qn,")
    buf = io.StringIO()
    write_efficiency_csv(buf, [efficiency_run(4, 200, seed=1, shard_size=100)])
    assert buf.getvalue().splitlines()[0] == "n,e_mad,e_sn,e_qn,se_mad,se_sn,se_qn"

