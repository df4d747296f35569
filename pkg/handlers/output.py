# handlers/output.py

"""
CSV-выгрузка: траектории, финальные значения, статистика, веса.
Точка как разделитель, строки заканчиваются \\n, порядок колонок фиксирован.
"""

from __future__ import annotations

import contextlib
import csv
import math
import sys
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, TextIO

import numpy as np

from core.config import settings
from models.results import BoxplotStats, FinalsRecord, Trajectory

STATS_COLUMNS = (
    "process",
    "n_samples",
    "median",
    "q1",
    "q3",
    "whisker_low",
    "whisker_high",
    "notch_low",
    "notch_high",
)


def format_number(value: float) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return settings.CSV_FLOAT_FORMAT.format(value)


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Файл или stdout ('-' / None)"""
    if path in (None, "-"):
        yield sys.stdout
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="") as fh:
        yield fh


def _writer(fh: TextIO):
    return csv.writer(fh, lineterminator="\n")


def write_trajectories(trajectories: Sequence[Trajectory], path: Optional[str]) -> int:
    """step, <process…>; возвращает число строк данных"""
    if not trajectories:
        raise ValueError("nothing to write")
    steps = trajectories[0].steps
    columns: List[np.ndarray] = [t.values for t in trajectories]
    with open_output(path) as fh:
        writer = _writer(fh)
        writer.writerow(["step", *(t.process_id for t in trajectories)])
        for row_index, step in enumerate(steps.tolist()):
            writer.writerow([step, *(format_number(col[row_index]) for col in columns)])
    return len(steps)


def finals_records(finals: Dict[str, np.ndarray]) -> List[FinalsRecord]:
    """Строки по процессу, затем по прогону"""
    return [
        FinalsRecord(process, run, float(value))
        for process, values in finals.items()
        for run, value in enumerate(values.tolist())
    ]


def write_finals(finals: Dict[str, np.ndarray], path: Optional[str]) -> int:
    records = finals_records(finals)
    with open_output(path) as fh:
        writer = _writer(fh)
        writer.writerow(FinalsRecord._fields)
        for record in records:
            writer.writerow([record.process, record.run, format_number(record.final_log10)])
    return len(records)


def write_stats(stats: Dict[str, BoxplotStats], path: Optional[str]) -> int:
    with open_output(path) as fh:
        writer = _writer(fh)
        writer.writerow(STATS_COLUMNS)
        for process, s in stats.items():
            writer.writerow([
                process,
                s.n_samples,
                *(format_number(getattr(s, name)) for name in STATS_COLUMNS[2:]),
            ])
    return len(stats)


def write_weights(snapshot: Dict[int, float], path: Optional[str]) -> int:
    with open_output(path) as fh:
        writer = _writer(fh)
        writer.writerow(["k", "weight"])
        for k, weight in snapshot.items():
            writer.writerow([k, format_number(weight)])
    return len(snapshot)
