# utils/validators.py

"""
Разбор значений флагов CLI: case, scenario, null, списки.
Ошибки разбора → InvalidArgument (CLI превращает их в код выхода 2).
"""

from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import ValidationError

from core.exceptions import InvalidArgument
from models.markov import CASE_PRESETS, MarkovParams
from models.scenario import SCENARIO_PRESETS

CASE_HINT = "hard, easy or pi10=<float>,pi11=<float>"
SCENARIO_HINT = "small, medium, large or n=<int>"
NULL_HINT = "pi=<float in [0, 1]>"


def _parse_assignments(raw: str, kind: str, hint: str) -> Dict[str, str]:
    # "pi10=0.3,pi11=0.7" -> {"pi10": "0.3", "pi11": "0.7"}
    pairs: Dict[str, str] = {}
    for part in raw.split(","):
        key, sep, value = part.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise InvalidArgument(kind, raw, hint)
        pairs[key.strip().lower()] = value.strip()
    return pairs


def _to_float(value: str, kind: str, raw: str, hint: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise InvalidArgument(kind, raw, hint) from None


def parse_case(raw: str) -> MarkovParams:
    if raw is None:
        raise InvalidArgument("case", "", CASE_HINT)
    v = raw.strip().lower()
    if v in CASE_PRESETS:
        return MarkovParams.preset(v)
    pairs = _parse_assignments(v, "case", CASE_HINT)
    if set(pairs) != {"pi10", "pi11"}:
        raise InvalidArgument("case", raw, CASE_HINT)
    try:
        return MarkovParams(
            pi_1_given_0=_to_float(pairs["pi10"], "case", raw, CASE_HINT),
            pi_1_given_1=_to_float(pairs["pi11"], "case", raw, CASE_HINT),
        )
    except ValidationError:
        raise InvalidArgument("case", raw, "probabilities strictly inside (0, 1)") from None


def parse_scenario(raw: str) -> int:
    """Имя сценария или n=<int> → число шагов"""
    v = (raw or "").strip().lower()
    if v in SCENARIO_PRESETS:
        return SCENARIO_PRESETS[v]
    pairs = _parse_assignments(v, "scenario", SCENARIO_HINT)
    if set(pairs) != {"n"}:
        raise InvalidArgument("scenario", raw, SCENARIO_HINT)
    try:
        n_steps = int(pairs["n"])
    except ValueError:
        raise InvalidArgument("scenario", raw, SCENARIO_HINT) from None
    if n_steps < 1:
        raise InvalidArgument("scenario", raw, "n >= 1")
    return n_steps


def parse_null(raw: Optional[str]) -> Optional[float]:
    if raw is None:
        return None
    pairs = _parse_assignments(raw.strip().lower(), "null", NULL_HINT)
    if set(pairs) != {"pi"}:
        raise InvalidArgument("null", raw, NULL_HINT)
    pi = _to_float(pairs["pi"], "null", raw, NULL_HINT)
    if not 0.0 <= pi <= 1.0:
        raise InvalidArgument("null", raw, NULL_HINT)
    return pi


def parse_names(raw: str) -> List[str]:
    # "ub, lb,bk" -> ["ub", "lb", "bk"], порядок и уникальность сохраняются
    names: List[str] = []
    for part in (raw or "").split(","):
        name = part.strip().lower()
        if name and name not in names:
            names.append(name)
    if not names:
        raise InvalidArgument("process list", raw, "comma-separated process ids")
    return names


def parse_floats(raw: str, kind: str = "jumping rates") -> List[float]:
    values = [
        _to_float(p.strip(), kind, raw, "comma-separated floats")
        for p in (raw or "").split(",")
        if p.strip()
    ]
    if not values:
        raise InvalidArgument(kind, raw, "comma-separated floats")
    return values
