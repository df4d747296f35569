# handlers/common.py

"""Общие для команд шаги: сценарий и список процессов из флагов"""

from __future__ import annotations

import argparse
from typing import Tuple

from core.config import settings
from models.scenario import DataLaw, Scenario


def scenario_from_args(args: argparse.Namespace) -> Scenario:
    return Scenario(
        n_steps=args.scenario,
        case=args.case,
        data_law=DataLaw(null_pi=args.null),
        seed=args.seed,
    )


def jump_rates_from_args(args: argparse.Namespace) -> Tuple[float, ...]:
    rates = args.sj_jump if args.sj_jump is not None else settings.SJ_JUMP_RATES
    return tuple(rates)


def describe(scenario: Scenario) -> str:
    """Подпись для рисунков"""
    return (
        f"{scenario.data_law.describe(scenario.case)}, "
        f"N={scenario.n_steps}, seed={scenario.seed}"
    )
