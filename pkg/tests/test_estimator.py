"""Estimator: hand-enumerated window oracles, gap handling, invariances."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from opdep.errors import (
    DegenerateDistribution,
    DimensionMismatch,
    EmptyInput,
    InvalidParameter,
    SeriesTooShort,
)
from opdep.estimator import TimeSeriesPair, empirical_distribution, empirical_opd, sliding_patterns

NAN = math.nan


def test_pair_validation():
    with pytest.raises(EmptyInput):
        TimeSeriesPair([], [])
    with pytest.raises(DimensionMismatch):
        TimeSeriesPair([1.0, 2.0], [1.0])
    pair = TimeSeriesPair([1, 2], [3, 4])
    assert pair.x == (1.0, 2.0) and len(pair) == 2


def test_sliding_patterns_hand_enumeration():
    # windows: (1,2)->(1,2), (2,3)->(1,2), (3,2)->(2,1), (2,1)->(2,1)
    patterns, skipped = sliding_patterns([1, 2, 3, 2, 1], d=2)
    assert patterns == [(1, 2), (1, 2), (2, 1), (2, 1)]
    assert skipped == 0


def test_sliding_patterns_ties_break_toward_earlier_index():
    patterns, _ = sliding_patterns([1, 1, 0], d=2)
    assert patterns == [(1, 2), (2, 1)]


def test_sliding_patterns_step():
    patterns, skipped = sliding_patterns([1, 2, 3, 4, 5], d=2, step=2)
    assert patterns == [(1, 2), (1, 2)]  # offsets 0 and 2; offset 4 does not fit
    assert skipped == 0


def test_sliding_patterns_skips_non_finite_windows():
    patterns, skipped = sliding_patterns([1, 2, NAN, 4, 5], d=2)
    # offsets 0..3; windows at 1 and 2 touch the NaN
    assert patterns == [(1, 2), (1, 2)]
    assert skipped == 2


def test_sliding_patterns_too_short():
    with pytest.raises(SeriesTooShort):
        sliding_patterns([1.0, 2.0], d=3)
    with pytest.raises(InvalidParameter):
        sliding_patterns([1.0, 2.0, 3.0], d=2, step=0)


def test_empirical_distribution_counts():
    dist, used, skipped = empirical_distribution([1, 2, 3, 2, 1], d=2)
    assert used == 4 and skipped == 0
    assert dist.probs == (0.5, 0.5)
    with pytest.raises(EmptyInput):
        empirical_distribution([NAN, NAN, NAN], d=2)


def test_empirical_opd_fully_coincident_pair():
    # Four windows, all pattern-coincident, half of each pattern:
    # coincidence 1, cross term 1/2, value (1 - 1/2) / (1 - 1/2) = 1.
    pair = TimeSeriesPair([1, 2, 3, 2, 1], [2, 3, 4, 1, 0])
    est = empirical_opd(pair, d=2)
    assert est.value == 1.0
    assert est.coincidence == 1.0
    assert est.cross_term == 0.5
    assert est.window_count == 4
    assert est.skipped_windows == 0


def test_empirical_opd_hand_case_mixed():
    # x windows: (1,2),(1,2),(2,1); y windows: (1,2),(2,1),(1,2)
    # coincidence 1/3; px=(2/3,1/3), py=(2/3,1/3); cross=5/9
    # value = (1/3 - 5/9) / (1 - 5/9) = -0.5
    pair = TimeSeriesPair([0, 1, 2, 0], [1, 2, 0, 5])
    est = empirical_opd(pair, d=2)
    assert est.coincidence == pytest.approx(1 / 3, abs=1e-15)
    assert est.cross_term == pytest.approx(5 / 9, abs=1e-15)
    assert est.value == pytest.approx(-0.5, abs=1e-15)


def test_empirical_opd_common_window_set():
    # NaN in x at index 2 and in y at index 5: of the six offsets only
    # 0 and 3 have both windows finite.
    x = [1, 2, NAN, 4, 3, 6, 7]
    y = [1, 0, 3, 4, 5, NAN, 2]
    est = empirical_opd(TimeSeriesPair(x, y), d=2)
    assert est.window_count == 2
    assert est.skipped_windows == 4
    assert est.coincidence == 0.0
    assert est.value == -1.0


def test_empirical_opd_errors():
    with pytest.raises(SeriesTooShort):
        empirical_opd(TimeSeriesPair([1], [1]), d=2)
    with pytest.raises(EmptyInput):
        empirical_opd(TimeSeriesPair([1, NAN, 3], [1, 2, NAN]), d=2)
    with pytest.raises(DegenerateDistribution):
        empirical_opd(TimeSeriesPair([1, 2, 3, 4], [4, 5, 6, 7]), d=2)


def test_estimate_invariant_under_increasing_transforms_bit_for_bit():
    x = [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9]
    y = [2, 7, 1, 8, 2, 8, 1, 8, 2, 8, 4, 5, 9, 0, 4]
    base = empirical_opd(TimeSeriesPair(x, y), d=3)
    for transform in (lambda t: 3.0 * t + 1.0, lambda t: float(t) ** 3, math.atan):
        mapped = empirical_opd(
            TimeSeriesPair([transform(v) for v in x], [transform(v) for v in y]), d=3
        )
        assert mapped == base


series = st.lists(st.integers(min_value=-9, max_value=9), min_size=6, max_size=40)


@settings(max_examples=200, derandomize=True)
@given(series, series)
def test_estimate_terms_are_probabilities(xs, ys):
    n = min(len(xs), len(ys))
    pair = TimeSeriesPair(xs[:n], ys[:n])
    try:
        est = empirical_opd(pair, d=2)
    except DegenerateDistribution:
        return
    assert 0.0 <= est.coincidence <= 1.0
    assert 0.0 < est.cross_term <= 1.0
    assert est.value <= 1.0
    assert est.window_count == n - 1
    assert est.skipped_windows == 0
    # determinism
    assert empirical_opd(pair, d=2) == est
