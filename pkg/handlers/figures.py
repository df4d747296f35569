# handlers/figures.py

"""
Статические SVG-рисунки: траектории, notched boxplots, веса BK.
SVG детерминирован: фиксированная соль хешей, без даты в метаданных.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from core.config import settings  # noqa: E402
from models.results import BoxplotStats, Trajectory  # noqa: E402

# UB красный, LB зелёный; остальные по умолчанию
PROCESS_COLORS = {
    "ub": "tab:red",
    "lb": "tab:green",
    "r": "tab:purple",
    "bk": "tab:blue",
    "sbk": "tab:orange",
}


def _save(fig: "plt.Figure", path: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": settings.SVG_HASH_SALT, "svg.fonttype": "path"}):
        fig.savefig(target, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_trajectories(trajectories: Sequence[Trajectory], path: str, title: str = "") -> None:
    """log10-траектории против номера шага"""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for trajectory in trajectories:
        ax.plot(
            trajectory.steps,
            np.where(np.isfinite(trajectory.values), trajectory.values, np.nan),
            label=trajectory.process_id,
            color=PROCESS_COLORS.get(trajectory.process_id),
            linewidth=1.0,
        )
    ax.set_xlabel("step")
    ax.set_ylabel("log10 value")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize="small")
    ax.grid(True, linewidth=0.3)
    _save(fig, path)


def plot_boxplots(stats: Dict[str, BoxplotStats], path: str, title: str = "") -> None:
    """Notched boxplots по готовой статистике (без выбросов)"""
    boxes = [
        {
            "label": name,
            "med": s.median,
            "q1": s.q1,
            "q3": s.q3,
            "whislo": s.whisker_low,
            "whishi": s.whisker_high,
            "cilo": s.notch_low,
            "cihi": s.notch_high,
            "fliers": [],
        }
        for name, s in stats.items()
    ]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bxp(boxes, shownotches=True, showfliers=False)
    ax.set_ylabel("final log10 value")
    if title:
        ax.set_title(title)
    ax.grid(True, axis="y", linewidth=0.3)
    _save(fig, path)


def plot_weights(snapshot: Dict[int, float], path: str, title: str = "") -> None:
    """Маргинальные веса BK по k на последнем шаге"""
    ks = np.fromiter(snapshot.keys(), dtype=int)
    weights = np.fromiter(snapshot.values(), dtype=float)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ks, weights, color=PROCESS_COLORS["bk"], linewidth=1.0)
    ax.set_xlabel("k")
    ax.set_ylabel("weight")
    if title:
        ax.set_title(title)
    ax.grid(True, linewidth=0.3)
    _save(fig, path)
