# tests/test_models.py

import numpy as np
import pytest
from pydantic import ValidationError

from models.markov import MarkovParams
from models.p_value import PValue
from models.results import BoxplotStats, Trajectory
from models.scenario import Scenario


class TestMarkovParams:
    def test_presets(self):
        hard = MarkovParams.preset("hard")
        easy = MarkovParams.preset("easy")
        assert (hard.pi_1_given_0, hard.pi_1_given_1) == (0.4, 0.6)
        assert (easy.pi_1_given_0, easy.pi_1_given_1) == (0.1, 0.9)
        assert hard.first_prob_one == 0.5

    @pytest.mark.parametrize("pi10, pi11", [(0.0, 0.5), (0.5, 1.0), (-0.1, 0.5), (0.5, 1.2)])
    def test_degenerate_rejected(self, pi10, pi11):
        with pytest.raises(ValidationError):
            MarkovParams(pi_1_given_0=pi10, pi_1_given_1=pi11)

    def test_transitions(self, easy):
        assert easy.transition(1, 1) == 0.9
        assert easy.transition(0, 1) == pytest.approx(0.1)
        assert easy.transition(1, 0) == 0.1
        assert easy.transition(0, 0) == pytest.approx(0.9)

    def test_frozen(self, hard):
        with pytest.raises(ValidationError):
            hard.pi_1_given_0 = 0.3


class TestScenario:
    @pytest.mark.parametrize("name, n", [("large", 10_000), ("medium", 1000), ("small", 100)])
    def test_presets(self, name, n):
        scenario = Scenario.from_presets("hard", name)
        assert scenario.n_steps == n
        assert scenario.seed == 2021
        assert scenario.data_law.is_markov

    def test_null_law(self):
        scenario = Scenario.from_presets("easy", "small", seed=7, null_pi=0.3)
        assert not scenario.data_law.is_markov
        assert scenario.data_law.describe(scenario.case) == "bernoulli(0.3)"

    def test_zero_steps_rejected(self, hard):
        with pytest.raises(ValidationError):
            Scenario(n_steps=0, case=hard)


class TestPValue:
    def test_interior(self):
        assert float(PValue(0.25)) == 0.25

    @pytest.mark.parametrize("value", [0.0, 1.0, -0.2, 1.5])
    def test_boundary_rejected(self, value):
        with pytest.raises(ValueError):
            PValue(value)


class TestResults:
    def test_trajectory_window(self):
        trajectory = Trajectory("ub", np.arange(10, dtype=float))
        view = trajectory.window(3)
        assert view.steps.tolist() == [8, 9, 10]
        assert view.values.tolist() == [7.0, 8.0, 9.0]
        assert view.final == trajectory.final

    def test_boxplot_order_enforced(self):
        with pytest.raises(ValidationError):
            BoxplotStats(
                median=5, q1=6, q3=7, whisker_low=0, whisker_high=9,
                notch_low=4, notch_high=6, n_samples=10,
            )
