# tests/test_core.py

import math

import numpy as np
import pytest
from scipy import stats

from core.exceptions import InvalidFactor
from core.logspace import BANKRUPT, log10_add_factor, log10_mean_exp
from core.rng import Purpose, RandomSource, make_substream


class TestLogSpace:
    def test_unit_factor_keeps_capital(self):
        assert log10_add_factor(0.0, 1.0) == 0.0

    def test_one_decade(self):
        assert log10_add_factor(2.0, 10.0) == pytest.approx(3.0)

    def test_bankruptcy_absorbs(self):
        capital = log10_add_factor(0.0, 0.0)
        assert capital == BANKRUPT
        assert log10_add_factor(capital, 5.0) == BANKRUPT

    def test_negative_factor_rejected(self):
        with pytest.raises(InvalidFactor):
            log10_add_factor(0.0, -0.5)

    def test_huge_capital_stays_finite(self):
        capital = 0.0
        for _ in range(2000):
            capital = log10_add_factor(capital, 10.0)
        assert capital == pytest.approx(2000.0)
        assert math.isfinite(capital)

    def test_mean_exp_matches_linear_mean(self):
        values = np.log10([0.5, 1.0, 2.5])
        assert log10_mean_exp(values) == pytest.approx(math.log10(4.0 / 3.0))

    def test_mean_exp_no_overflow(self):
        assert log10_mean_exp([1600.0, 1600.0]) == pytest.approx(1600.0)


class TestRandomSource:
    def test_same_key_same_stream(self, root_rng):
        a = make_substream(root_rng, 0, 0).uniforms(100)
        b = make_substream(root_rng, 0, 0).uniforms(100)
        assert np.array_equal(a, b)

    def test_distinct_runs_differ(self, root_rng):
        a = make_substream(root_rng, 0, 0).uniforms(100)
        b = make_substream(root_rng, 1, 0).uniforms(100)
        assert not np.array_equal(a, b)

    def test_distinct_purposes_differ(self, root_rng):
        a = make_substream(root_rng, 3, Purpose.DATA).uniforms(100)
        b = make_substream(root_rng, 3, Purpose.RANDOMIZER).uniforms(100)
        assert not np.array_equal(a, b)

    def test_substream_independent_of_root_consumption(self):
        fresh = RandomSource(2021)
        used = RandomSource(2021)
        used.uniforms(1000)
        assert np.array_equal(
            make_substream(fresh, 5, 1).uniforms(10),
            make_substream(used, 5, 1).uniforms(10),
        )

    def test_open_interval(self, root_rng):
        values = make_substream(root_rng, 0, 0).uniforms(100_000)
        assert np.all(values > 0.0) and np.all(values < 1.0)

    @pytest.mark.parametrize("run_index", [0, 7, 123])
    def test_uniformity(self, root_rng, run_index):
        values = make_substream(root_rng, run_index, 0).uniforms(10_000)
        assert stats.kstest(values, "uniform").statistic < 0.02

    def test_negative_seed_rejected(self):
        with pytest.raises(ValueError):
            RandomSource(-1)
