# handlers/sweep.py

"""
Команда sweep: много независимых прогонов, финальные значения,
статистика notched boxplot (+ SVG).
"""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Optional

import structlog

from core.config import settings
from handlers.common import describe, jump_rates_from_args, scenario_from_args
from handlers.figures import plot_boxplots
from handlers.output import write_finals, write_stats
from services.analytics_service import best_jump_rate, summarize_finals
from services.experiment_service import run_many

logger = structlog.get_logger(__name__)


def stats_path(args: argparse.Namespace) -> Optional[str]:
    """--stats или <stem>.stats.csv рядом с --out"""
    if args.stats:
        return args.stats
    if args.out in (None, "-"):
        return None
    out = Path(args.out)
    return str(out.with_name(f"{out.stem}.stats.csv"))


def cmd_sweep(args: argparse.Namespace) -> int:
    scenario = scenario_from_args(args)
    finals = run_many(
        scenario,
        args.runs,
        args.processes,
        jump_rates=jump_rates_from_args(args),
        threads=args.threads,
    )

    rows = write_finals(finals, args.out)
    logger.info("✅ finals written", rows=rows, out=args.out or "-")

    best = best_jump_rate(finals)
    if best is not None:
        logger.info("best jumping rate", process=best)

    target = stats_path(args)
    if not args.stats and args.runs < settings.MIN_BOXPLOT_SAMPLES:
        # boxplot и неявный stats-файл требуют MIN_BOXPLOT_SAMPLES прогонов
        logger.warning(
            "stats and figure skipped", runs=args.runs, minimum=settings.MIN_BOXPLOT_SAMPLES
        )
        return 0
    if target is None and not args.svg:
        return 0

    stats = summarize_finals(finals)
    if target is not None:
        write_stats(stats, target)
        logger.info("✅ stats written", rows=len(stats), out=target)
    if args.svg:
        plot_boxplots(stats, args.svg, title=f"{describe(scenario)}, runs={args.runs}")
        logger.info("✅ figure written", svg=args.svg)
    return 0
