# tests/test_benchmarks.py

import math

import numpy as np
import pytest

from core.rng import RandomSource
from services.benchmark_service import (
    BenchmarkState,
    LowerBenchmarkProcess,
    UpperBenchmarkProcess,
    bernoulli_mle_log10_likelihood,
    lb_value,
    markov_log10_likelihood,
    ub_step,
    ub_value,
)
from services.experiment_service import generate_markov


def test_first_bit_increment_is_zero(hard):
    for z in (0, 1):
        _, increment = ub_step(BenchmarkState(), hard, z)
        assert increment == 0.0


def test_hard_one_then_one(hard):
    state, _ = ub_step(BenchmarkState(), hard, 1)
    state, increment = ub_step(state, hard, 1)
    assert increment == pytest.approx(math.log10(1.2))
    assert ub_value(state) == pytest.approx(math.log10(1.2))


def test_lb_start_and_two_ones(hard):
    state = BenchmarkState()
    assert lb_value(state, hard) == 0.0
    for _ in range(2):
        state, _ = ub_step(state, hard, 1)
    assert lb_value(state, hard) == pytest.approx(math.log10(0.3))


def test_mle_likelihood_edges():
    assert bernoulli_mle_log10_likelihood(0, 0) == 0.0
    assert bernoulli_mle_log10_likelihood(5, 5) == 0.0
    assert bernoulli_mle_log10_likelihood(2, 1) == pytest.approx(math.log10(0.25))


def test_invalid_counts():
    with pytest.raises(ValueError):
        BenchmarkState(n=3, t00=1)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_incremental_matches_recomputed(easy, seed):
    bits = generate_markov(easy, 1000, RandomSource(seed))
    ub = UpperBenchmarkProcess(easy)
    lb = LowerBenchmarkProcess(easy)
    for z in bits.tolist():
        ub_log = ub.update(z, 0.5)
        lb_log = lb.update(z, 0.5)
        assert lb_log <= ub_log + 1e-12
    state = ub.state
    recomputed = markov_log10_likelihood(state, easy) - state.n * math.log10(0.5)
    assert ub.log_value == pytest.approx(recomputed, abs=1e-9)
    assert lb.log_value == pytest.approx(
        markov_log10_likelihood(state, easy) - bernoulli_mle_log10_likelihood(state.n, state.k),
        abs=1e-9,
    )
    assert state.k == int(np.sum(bits))
