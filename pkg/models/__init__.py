# models/__init__.py
"""
Точка входа для доменных типов.
"""

from models.markov import CASE_PRESETS, FIRST_PROB_ONE, MarkovParams
from models.p_value import PValue
from models.results import BoxplotStats, FinalsRecord, Trajectory
from models.scenario import SCENARIO_PRESETS, DataLaw, Scenario

__all__ = [
    "CASE_PRESETS",
    "FIRST_PROB_ONE",
    "MarkovParams",
    "PValue",
    "BoxplotStats",
    "FinalsRecord",
    "Trajectory",
    "SCENARIO_PRESETS",
    "DataLaw",
    "Scenario",
]
