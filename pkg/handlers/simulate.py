# handlers/simulate.py

"""
Команда simulate: один прогон, CSV траекторий (+ SVG).
Эксперименты рисунков с траекториями; --window даёт вид «под лупой».
"""

from __future__ import annotations

import argparse

import structlog

from handlers.common import describe, jump_rates_from_args, scenario_from_args
from handlers.figures import plot_trajectories
from handlers.output import write_trajectories
from services.experiment_service import RunOptions, run_single

logger = structlog.get_logger(__name__)


def cmd_simulate(args: argparse.Namespace) -> int:
    """
    Args:
        args: case, scenario, seed, null, processes, sj_jump, window, run, out, svg
    """
    scenario = scenario_from_args(args)
    options = RunOptions(
        jump_rates=jump_rates_from_args(args),
        window=args.window,
        run_index=args.run,
    )
    trajectories = run_single(scenario, args.processes, options)

    rows = write_trajectories(trajectories, args.out)
    logger.info("✅ trajectories written", rows=rows, out=args.out or "-")

    if args.svg:
        plot_trajectories(trajectories, args.svg, title=describe(scenario))
        logger.info("✅ figure written", svg=args.svg)
    return 0
