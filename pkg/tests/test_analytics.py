# tests/test_analytics.py

import numpy as np
import pytest

from core.exceptions import TooFewSamples
from services.analytics_service import best_jump_rate, boxplot_stats, summarize_finals


def test_five_points():
    stats = boxplot_stats([5, 3, 1, 4, 2])
    assert (stats.q1, stats.median, stats.q3) == (2.0, 3.0, 4.0)
    assert (stats.whisker_low, stats.whisker_high) == (1.0, 5.0)
    assert stats.n_samples == 5


def test_hundred_points():
    stats = boxplot_stats(range(1, 101))
    assert stats.median == pytest.approx(50.5)
    assert stats.iqr == pytest.approx(49.5)
    assert stats.notch_high - stats.median == pytest.approx(1.57 * 49.5 / 10)
    assert stats.median - stats.notch_low == pytest.approx(7.7715)


def test_outliers_outside_whiskers():
    stats = boxplot_stats([1, 2, 3, 4, 5, 6, 100])
    assert stats.whisker_high == 6.0
    assert stats.whisker_low == 1.0


def test_constant_samples():
    stats = boxplot_stats([2.5] * 10)
    assert stats.iqr == 0.0
    assert stats.notch_low == stats.notch_high == stats.median == 2.5


def test_too_few_samples():
    with pytest.raises(TooFewSamples) as err:
        boxplot_stats([1.0, 2.0])
    assert err.value.n_samples == 2


def test_summarize_keeps_order():
    finals = {"ub": np.arange(10.0), "bk": np.arange(5.0, 15.0)}
    summary = summarize_finals(finals)
    assert list(summary) == ["ub", "bk"]
    assert summary["bk"].median == pytest.approx(9.5)


def test_best_jump_rate():
    finals = {
        "bk": np.full(5, 100.0),
        "sj_0.001": np.array([1.0, 2.0, 3.0, 4.0, 5.0]),
        "sj_0.01": np.array([2.0, 3.0, 4.0, 5.0, 6.0]),
    }
    assert best_jump_rate(finals) == "sj_0.01"
    assert best_jump_rate({"bk": np.zeros(5)}) is None
