import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from robust_scale.order_stats import (
    WeightedValue,
    high_median,
    low_median,
    select_kth,
    weighted_high_median,
)

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)
# small integer pool so duplicates are common
tied = st.integers(-5, 5).map(float)
samples = st.lists(st.one_of(finite, tied), min_size=1, max_size=60)


def test_select_trivial():
    assert select_kth([3, 1, 2], 1) == 1
    assert select_kth([3, 1, 2], 3) == 3


def test_select_matches_sort_oracle_every_rank():
    x = np.random.default_rng(7).uniform(size=200)
    ref = np.sort(x)
    for k in range(1, 201):
        assert select_kth(x, k) == ref[k - 1]


def test_select_does_not_reorder_input():
    x = np.array([5.0, 1.0, 4.0, 2.0, 3.0])
    select_kth(x, 2)
    assert x.tolist() == [5.0, 1.0, 4.0, 2.0, 3.0]


@pytest.mark.parametrize("values,k,msg", [([], 1, "empty sample"), ([1.0, 2.0], 0, "rank out of range"),
                                          ([1.0, 2.0], 3, "rank out of range")])
def test_select_errors(values, k, msg):
    with pytest.raises(ValueError, match=msg):
        select_kth(values, k)


def test_select_rejects_nan():
    with pytest.raises(ValueError):
        select_kth([1.0, float("nan")], 1)


@given(samples, st.data())
def test_select_property(values, data):
    k = data.draw(st.integers(1, len(values)))
    assert select_kth(values, k) == sorted(values)[k - 1]


@given(samples, st.randoms())
def test_select_permutation_invariant(values, rnd):
    k = (len(values) + 1) // 2
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert select_kth(shuffled, k) == select_kth(values, k)


def test_medians_small():
    assert low_median([1, 2, 3, 4]) == 2
    assert high_median([1, 2, 3, 4]) == 3
    assert low_median([1, 2, 3]) == high_median([1, 2, 3]) == 2


@given(samples)
def test_medians_against_sort(values):
    s = sorted(values)
    n = len(s)
    lo, hi = low_median(values), high_median(values)
    assert lo == s[(n + 1) // 2 - 1]
    assert hi == s[n // 2]
    assert lo <= hi
    if n % 2:
        assert lo == hi


def test_weighted_trivial():
    assert weighted_high_median([(5, 1)]) == 5
    assert weighted_high_median([(1, 1), (2, 1), (3, 1), (4, 1)]) == 3
    assert weighted_high_median([WeightedValue(2.0, 3), WeightedValue(1.0, 1)]) == 2


def test_weighted_errors():
    with pytest.raises(ValueError):
        weighted_high_median([])
    with pytest.raises(ValueError):
        weighted_high_median([(1.0, 0)])
    with pytest.raises(ValueError):
        weighted_high_median([(1.0, -2)])


def _expand(values, weights):
    return [v for v, w in zip(values, weights) for _ in range(w)]


def test_weighted_random_against_expansion():
    rng = np.random.default_rng(3)
    for _ in range(300):
        m = int(rng.integers(1, 40))
        values = np.round(rng.normal(size=m), 1)
        weights = rng.integers(1, 6, size=m)
        assert weighted_high_median(values=values, weights=weights) == high_median(_expand(values, weights))


@given(st.lists(st.tuples(st.one_of(finite, tied), st.integers(1, 50)), min_size=1, max_size=40))
def test_weighted_expansion_property(items):
    values = [v for v, _ in items]
    weights = [w for _, w in items]
    assert weighted_high_median(items) == high_median(_expand(values, weights))


@given(st.lists(st.one_of(finite, tied), min_size=1, max_size=60))
def test_unit_weights_equal_high_median(values):
    assert weighted_high_median([(v, 1) for v in values]) == high_median(values)
