# services/experiment_service.py

"""
Выполнение сценариев: генерация данных, прогон всех процессов на общем
потоке, многократные прогоны (sweep).

Политика сидов: для прогона r данные берутся из подпотока (r, DATA),
рандомизаторы θ: из (r, RANDOMIZER). Прогоны независимы от порядка
и от числа воркеров.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from core.config import settings
from core.exceptions import UnknownProcess
from core.rng import Purpose, RandomSource, make_substream
from models.markov import FIRST_PROB_ONE, MarkovParams
from models.results import Trajectory
from models.scenario import Scenario
from services.base import BaseProcess
from services.bayes_kelly_service import BayesKellyProcess, WeightTable
from services.benchmark_service import LowerBenchmarkProcess, UpperBenchmarkProcess
from services.conformal_service import p_value_stream, stream_digest
from services.eprocess_service import EProcess
from services.simple_jumper_service import SimpleJumperProcess
from services.simplified_service import SimplifiedBayesKellyProcess

logger = structlog.get_logger(__name__)

PROCESS_IDS: Tuple[str, ...] = ("ub", "lb", "bk", "sbk", "sj", "r")


@dataclass(frozen=True)
class RunOptions:
    """Параметры прогона, не входящие в сценарий"""
    jump_rates: Tuple[float, ...] = field(default_factory=lambda: tuple(settings.SJ_JUMP_RATES))
    window: Optional[int] = None  # последние W шагов
    run_index: int = 0


# ========== DATA ==========

def generate_markov(params: MarkovParams, n: int, rng: RandomSource) -> np.ndarray:
    """z₁ ~ Ber(0.5), z_{i+1} ~ Ber(π₁|z_i); одна величина на бит"""
    bits = np.zeros(n, dtype=np.int8)
    if n == 0:
        return bits
    u = rng.uniforms(n).tolist()
    thresholds = (params.pi_1_given_0, params.pi_1_given_1)
    prev = 1 if u[0] < FIRST_PROB_ONE else 0
    bits[0] = prev
    for i in range(1, n):
        prev = 1 if u[i] < thresholds[prev] else 0
        bits[i] = prev
    return bits


def generate_bernoulli(pi: float, n: int, rng: RandomSource) -> np.ndarray:
    if not 0.0 <= pi <= 1.0:
        raise ValueError(f"pi must lie in [0, 1], got {pi}")
    return (rng.uniforms(n) < pi).astype(np.int8)


def generate_data(scenario: Scenario, rng: RandomSource) -> np.ndarray:
    if scenario.data_law.is_markov:
        return generate_markov(scenario.case, scenario.n_steps, rng)
    return generate_bernoulli(scenario.data_law.null_pi, scenario.n_steps, rng)


# ========== PROCESSES ==========

def build_processes(
    process_set: Sequence[str],
    params: MarkovParams,
    jump_rates: Sequence[float],
) -> List[BaseProcess]:
    """Имена → автоматы в заданном порядке; sj разворачивается по jump_rates"""
    processes: List[BaseProcess] = []
    for name in process_set:
        if name == "ub":
            processes.append(UpperBenchmarkProcess(params))
        elif name == "lb":
            processes.append(LowerBenchmarkProcess(params))
        elif name == "bk":
            processes.append(BayesKellyProcess(params))
        elif name == "sbk":
            processes.append(SimplifiedBayesKellyProcess(params))
        elif name == "sj":
            processes.extend(SimpleJumperProcess(rate) for rate in jump_rates)
        elif name == "r":
            processes.append(EProcess())
        else:
            raise UnknownProcess(name, PROCESS_IDS)
    return processes


def process_columns(process_set: Sequence[str], jump_rates: Sequence[float]) -> List[str]:
    """Идентификаторы траекторий в порядке выдачи"""
    columns: List[str] = []
    for name in process_set:
        if name == "sj":
            columns.extend(f"sj_{rate:g}" for rate in jump_rates)
        elif name in PROCESS_IDS:
            columns.append(name)
        else:
            raise UnknownProcess(name, PROCESS_IDS)
    return columns


# ========== RUNS ==========

def run_single(
    scenario: Scenario,
    process_set: Sequence[str],
    options: Optional[RunOptions] = None,
) -> List[Trajectory]:
    """
    Один прогон: общий поток битов для всех процессов и общий поток
    p-values для конформных (BK, sBK, SJ видят одни и те же p).
    """
    options = options or RunOptions()
    processes = build_processes(process_set, scenario.case, options.jump_rates)

    root = RandomSource(scenario.seed)
    bits = generate_data(scenario, make_substream(root, options.run_index, Purpose.DATA))
    p_values = p_value_stream(bits, make_substream(root, options.run_index, Purpose.RANDOMIZER))

    data_digest = stream_digest(bits)
    p_digest = stream_digest(p_values)
    logger.debug(
        "run_started",
        run=options.run_index,
        n_steps=scenario.n_steps,
        data_law=scenario.data_law.describe(scenario.case),
        processes=[proc.process_id for proc in processes],
        data_digest=data_digest[:12],
        p_digest=p_digest[:12],
    )

    z_list = bits.tolist()
    p_list = p_values.tolist()
    trajectories: List[Trajectory] = []
    for proc in processes:
        values = np.empty(scenario.n_steps)
        update = proc.update
        for i, (z, p) in enumerate(zip(z_list, p_list)):
            values[i] = update(z, p)
        trajectory = Trajectory(
            process_id=proc.process_id,
            values=values,
            data_digest=data_digest,
            p_digest=p_digest if proc.uses_p_values else None,
            cells_touched=proc.cells_touched,
        )
        if options.window:
            trajectory = trajectory.window(options.window)
        trajectories.append(trajectory)
    return trajectories


def _run_finals(
    run_index: int,
    scenario: Scenario,
    process_set: Tuple[str, ...],
    jump_rates: Tuple[float, ...],
) -> Dict[str, float]:
    options = RunOptions(jump_rates=jump_rates, run_index=run_index)
    return {t.process_id: t.final for t in run_single(scenario, process_set, options)}


def run_many(
    scenario: Scenario,
    n_runs: int,
    process_set: Sequence[str],
    jump_rates: Optional[Sequence[float]] = None,
    threads: Optional[int] = None,
) -> Dict[str, np.ndarray]:
    """
    n_runs независимых прогонов; возвращает финальные log10-значения
    по процессам (массивы длины n_runs в порядке run_index).
    """
    if n_runs < 1:
        raise ValueError(f"n_runs must be >= 1, got {n_runs}")
    jump_rates = tuple(settings.SJ_JUMP_RATES if jump_rates is None else jump_rates)
    threads = threads or settings.DEFAULT_THREADS
    columns = process_columns(process_set, jump_rates)

    worker = partial(
        _run_finals,
        scenario=scenario,
        process_set=tuple(process_set),
        jump_rates=jump_rates,
    )
    logger.info("sweep_started", runs=n_runs, threads=threads, processes=columns)

    if threads == 1:
        results = [worker(run_index) for run_index in range(n_runs)]
    else:
        chunksize = max(1, n_runs // (threads * 4))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            # map сохраняет порядок run_index → детерминированная свёртка
            results = list(pool.map(worker, range(n_runs), chunksize=chunksize))

    finals = {name: np.array([r[name] for r in results]) for name in columns}
    logger.info("sweep_finished", runs=n_runs)
    return finals


def bk_weights_at(
    scenario: Scenario,
    step: Optional[int] = None,
    run_index: int = 0,
) -> WeightTable:
    """
    Веса BK после шага step (по умолчанию последнего) на тех же потоках,
    что и run_single с этим run_index.
    """
    step = scenario.n_steps if step is None else step
    if not 1 <= step <= scenario.n_steps:
        raise ValueError(f"step must lie in [1, {scenario.n_steps}], got {step}")

    root = RandomSource(scenario.seed)
    bits = generate_data(scenario, make_substream(root, run_index, Purpose.DATA))
    p_values = p_value_stream(bits, make_substream(root, run_index, Purpose.RANDOMIZER))

    process = BayesKellyProcess(scenario.case)
    for z, p in zip(bits[:step].tolist(), p_values[:step].tolist()):
        process.update(z, p)
    logger.debug("weights_snapshot", step=step, log10_bk=process.log_value)
    return process.weights
