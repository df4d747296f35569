# handlers/weights.py

"""Команда weights: маргинальные веса BK по k на заданном шаге"""

from __future__ import annotations

import argparse

import structlog

from handlers.common import describe, scenario_from_args
from handlers.figures import plot_weights
from handlers.output import write_weights
from services.bayes_kelly_service import export_weight_snapshot
from services.experiment_service import bk_weights_at

logger = structlog.get_logger(__name__)


def cmd_weights(args: argparse.Namespace) -> int:
    scenario = scenario_from_args(args)
    weights = bk_weights_at(scenario, step=args.step, run_index=args.run)
    snapshot = export_weight_snapshot(weights)

    rows = write_weights(snapshot, args.out)
    logger.info("✅ weights written", rows=rows, step=weights.n, out=args.out or "-")

    if args.svg:
        plot_weights(snapshot, args.svg, title=f"{describe(scenario)}, step={weights.n}")
    return 0
