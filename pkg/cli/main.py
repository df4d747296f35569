# cli/main.py
"""
Главная точка входа CLI.
Разбор флагов, настройка логирования, запуск команды.

Коды выхода: 0 успех, 1 ошибка выполнения, 2 ошибка флагов.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, List, Optional, TypeVar

import structlog
from pydantic import ValidationError

from core.config import settings
from core.exceptions import ConformalTestingError, InvalidArgument
from core.log import setup_logging
from handlers.simulate import cmd_simulate
from handlers.sweep import cmd_sweep
from handlers.weights import cmd_weights
from services.experiment_service import PROCESS_IDS
from utils.validators import parse_case, parse_floats, parse_names, parse_null, parse_scenario

logger = structlog.get_logger(__name__)

T = TypeVar("T")

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


def _flag(parse: Callable[[str], T], name: str) -> Callable[[str], T]:
    """Обернуть парсер: InvalidArgument → ArgumentTypeError (argparse выйдет с кодом 2)"""
    def wrapper(raw: str) -> T:
        try:
            return parse(raw)
        except InvalidArgument as e:
            raise argparse.ArgumentTypeError(str(e)) from None
    wrapper.__name__ = name
    return wrapper


def _unsigned(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got '{raw}'") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got '{raw}'")
    return value


def _positive(raw: str) -> int:
    value = _unsigned(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{raw}'")
    return value


def _jump_rates(raw: str) -> List[float]:
    rates = parse_floats(raw)
    if any(not 0.0 <= rate <= 1.0 for rate in rates):
        raise InvalidArgument("jumping rates", raw, "values in [0, 1]")
    return rates


def _processes(raw: str) -> List[str]:
    names = parse_names(raw)
    unknown = [name for name in names if name not in PROCESS_IDS]
    if unknown:
        raise InvalidArgument("process list", raw, ",".join(PROCESS_IDS))
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--case", type=_flag(parse_case, "case"), default=parse_case("hard"),
                        help="hard | easy | pi10=..,pi11=.. (default: hard)")
    common.add_argument("--scenario", type=_flag(parse_scenario, "scenario"), default=parse_scenario("medium"),
                        help="small | medium | large | n=.. (default: medium)")
    common.add_argument("--seed", type=_unsigned, default=settings.DEFAULT_SEED)
    common.add_argument("--null", type=_flag(parse_null, "null"), default=None, metavar="pi=FLOAT",
                        help="generate data from Ber(pi) instead of the Markov alternative")
    common.add_argument("--out", default=None, help="output CSV path (default: stdout)")
    common.add_argument("--svg", default=None, help="also write an SVG figure")
    common.add_argument("--run", type=_unsigned, default=0, help="run index (substream)")
    common.add_argument("--log-level", default=None)
    common.add_argument("--log-format", choices=("console", "json"), default=None)

    parser = argparse.ArgumentParser(
        prog="conformal-markov",
        description="Conformal test martingales for exchangeability against Markov alternatives",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", parents=[common], help="one run, trajectory CSV")
    simulate.add_argument("--processes", type=_flag(_processes, "processes"),
                          default=["ub", "lb", "r", "bk", "sbk"])
    simulate.add_argument("--sj-jump", type=_flag(_jump_rates, "sj-jump"), default=None)
    simulate.add_argument("--window", type=_positive, default=None,
                          help="keep only the last W steps")
    simulate.set_defaults(handler=cmd_simulate)

    sweep = sub.add_parser("sweep", parents=[common], help="many runs, finals and boxplot stats")
    sweep.add_argument("--processes", type=_flag(_processes, "processes"),
                       default=["ub", "lb", "bk", "sbk"])
    sweep.add_argument("--sj-jump", type=_flag(_jump_rates, "sj-jump"), default=None)
    sweep.add_argument("--runs", type=_positive, default=settings.DEFAULT_RUNS)
    sweep.add_argument("--threads", type=_positive, default=settings.DEFAULT_THREADS)
    sweep.add_argument("--stats", default=None, help="boxplot stats CSV path")
    sweep.set_defaults(handler=cmd_sweep)

    weights = sub.add_parser("weights", parents=[common], help="BK weight snapshot")
    weights.add_argument("--step", type=_positive, default=None,
                         help="snapshot step (default: last)")
    weights.set_defaults(handler=cmd_weights)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "step", None) is not None and args.step > args.scenario:
            parser.error(f"--step {args.step} exceeds the scenario length {args.scenario}")
    except SystemExit as e:
        # argparse выходит с 2 при ошибке флагов и с 0 после --help
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(args.log_level, args.log_format)

    try:
        return args.handler(args)
    except ValidationError as e:
        logger.error("❌ invalid parameters", error=str(e))
        return EXIT_USAGE
    except (ConformalTestingError, OSError, ValueError) as e:
        logger.error("❌ command failed", command=args.command, error=str(e))
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
