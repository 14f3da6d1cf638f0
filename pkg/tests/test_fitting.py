import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from robust_scale.correction import published_factors
from robust_scale.fitting import FitResult, fit_inverse_poly, predict, prediction_error


def _window(table, parity, lo=100, hi=1000):
    want = 1 if parity == "odd" else 0
    return [(n, f) for n, f in sorted(table.items()) if lo < n <= hi and n % 2 == want]


def _synthetic(alpha, beta, ns):
    return [(n, 1 + alpha / n + beta / n**2) for n in ns]


def test_exact_recovery():
    fit = fit_inverse_poly(_synthetic(-1.594, 3.22, range(101, 1001, 2)), "odd")
    assert fit.alpha == pytest.approx(-1.594, abs=1e-10)
    assert fit.beta == pytest.approx(3.22, abs=1e-10)
    assert fit.residual_rms < 1e-14
    assert fit.n_points == 450 and fit.parity == "odd"


def test_exact_data_predicts_exactly():
    pts = _synthetic(0.3, -2.0, [3, 8, 20, 51])
    fit = fit_inverse_poly(pts, None)
    err, _ = prediction_error(dict(pts), fit, range(2, 100))
    assert err < 1e-15


def test_parity_filter():
    pts = _synthetic(1.0, 1.0, range(101, 200, 2)) + _synthetic(-5.0, 7.0, range(102, 201, 2))
    odd = fit_inverse_poly(pts, "odd")
    even = fit_inverse_poly(pts, "even")
    assert odd.alpha == pytest.approx(1.0, abs=1e-9)
    assert even.alpha == pytest.approx(-5.0, abs=1e-9)


def test_agrees_with_lstsq():
    rng = np.random.default_rng(0)
    ns = rng.choice(np.arange(50, 5000), size=40, replace=False)
    ys = 1 + 0.4 / ns - 3 / ns**2 + rng.normal(scale=1e-4, size=ns.size)
    fit = fit_inverse_poly(zip(ns, ys), None)
    design = np.column_stack([1 / ns, 1 / ns**2])
    (a, b), *_ = np.linalg.lstsq(design, ys - 1, rcond=None)
    assert fit.alpha == pytest.approx(a, rel=1e-8)
    assert fit.beta == pytest.approx(b, rel=1e-7)


ns_strategy = st.lists(st.integers(2, 20_000), min_size=3, max_size=60, unique=True)


@given(ns_strategy, st.floats(-5, 5), st.floats(-20, 20), st.integers(0, 2**32 - 1))
def test_residuals_orthogonal_to_regressors(ns, alpha, beta, seed):
    ns = np.array(ns, dtype=float)
    noise = np.random.default_rng(seed).normal(scale=1e-3, size=ns.size)
    ys = 1 + alpha / ns + beta / ns**2 + noise
    fit = fit_inverse_poly(zip(ns.astype(int), ys), None)
    resid = ys - 1 - fit.alpha / ns - fit.beta / ns**2
    for reg in (1 / ns, 1 / ns**2):
        assert abs(resid @ reg) <= 1e-8


@st.composite
def table_windows(draw):
    """Parity-filtered regular grids spanning at least a factor 3 in n, the
    shape of every fit the tables call for."""
    lo = draw(st.integers(2, 600))
    hi = draw(st.integers(3 * lo, 10_000))
    step = 2 * draw(st.integers(1, 20))
    start = lo + 1 + draw(st.integers(0, 1))
    ns = list(range(start, hi + 1, step))
    if len(ns) < 3:
        ns = [start, start + 2, hi + 1]
    return np.array(ns, dtype=float)


@given(table_windows(), st.floats(-5, 5), st.floats(-20, 20), st.integers(0, 2**32 - 1))
def test_refit_on_own_predictions(ns, alpha, beta, seed):
    # on tightly clustered n the two regressors are nearly collinear and a one-ulp
    # change in the predictions moves beta by more than 1e-10 under any solver
    ys = 1 + alpha / ns + beta / ns**2 + np.random.default_rng(seed).normal(scale=1e-3, size=ns.size)
    fit = fit_inverse_poly(zip(ns.astype(int), ys), None)
    refit = fit_inverse_poly(zip(ns.astype(int), fit(ns)), None)
    assert refit.alpha == pytest.approx(fit.alpha, abs=1e-10)
    assert refit.beta == pytest.approx(fit.beta, abs=1e-10)


def test_refit_on_table_windows():
    for kind in ("sn", "qn"):
        table = published_factors(kind)
        for parity in ("odd", "even"):
            for lo, hi in ((100, 1000), (100, 10_000), (1, 100)):
                pts = _window(table, parity, lo, hi)
                fit = fit_inverse_poly(pts, parity)
                ns = np.array([n for n, _ in pts])
                refit = fit_inverse_poly(zip(ns, fit(ns)), parity)
                assert refit.alpha == pytest.approx(fit.alpha, abs=1e-10)
                assert refit.beta == pytest.approx(fit.beta, abs=1e-10)


def test_on_curve_point_leaves_fit_unchanged():
    table = published_factors("qn")
    pts = _window(table, "odd")
    fit = fit_inverse_poly(pts, "odd")
    extra = fit_inverse_poly(pts + [(1501, float(fit(1501)))], "odd")
    assert extra.alpha == pytest.approx(fit.alpha, abs=1e-10)
    assert extra.beta == pytest.approx(fit.beta, abs=1e-10)


def test_errors():
    with pytest.raises(ValueError, match="underdetermined fit"):
        fit_inverse_poly([(101, 1.0)], "odd")
    with pytest.raises(ValueError, match="underdetermined fit"):
        fit_inverse_poly([(101, 1.0), (103, 1.0)], "even")
    with pytest.raises(ValueError, match="singular"):
        fit_inverse_poly([(101, 1.0), (101, 1.1)], "odd")
    with pytest.raises(ValueError):
        fit_inverse_poly([(3, 1.0), (5, 1.0)], "both")


@pytest.mark.parametrize(
    "kind,parity,alpha",
    [("qn", "odd", -1.594), ("qn", "even", -3.672), ("sn", "odd", 0.707), ("sn", "even", 0.043)],
)
def test_published_coefficients_recovered(kind, parity, alpha):
    fit = fit_inverse_poly(_window(published_factors(kind), parity), parity)
    assert fit.alpha == pytest.approx(alpha, abs=0.05)


@pytest.mark.parametrize(
    "kind,coeffs",
    [("qn", {"odd": (-1.594, 3.22), "even": (-3.672, 11.087)}),
     ("sn", {"odd": (0.707, -7.181), "even": (0.043, -6.288)})],
)
def test_published_equations_track_table(kind, coeffs):
    table = {n: f for n, f in published_factors(kind).items() if n > 100}
    for parity, (a, b) in coeffs.items():
        fit = FitResult(a, b, parity, 0.0, 0)
        err, where = prediction_error(table, fit, range(101, 10_001))
        assert err <= 0.0002
        assert where is not None


def test_prediction_error_empty_scan():
    fit = FitResult(0.0, 0.0, "odd", 0.0, 0)
    assert prediction_error({4: 1.0}, fit, range(2, 10)) == (0.0, None)


def test_predict_vectorized():
    out = predict(1.0, 2.0, np.array([1, 2]))
    assert out.tolist() == [4.0, 2.0]


def test_to_dict_round_trip():
    fit = fit_inverse_poly(_synthetic(1, 1, [5, 7, 9]), "odd")
    assert FitResult(**fit.to_dict()) == fit
