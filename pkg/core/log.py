#/core/log.py
"""
Настройка логирования: structlog поверх stdlib logging.
Логи идут в stderr, stdout остаётся для данных (CSV).
"""

from __future__ import annotations

import logging
import sys
from typing import Optional

import structlog

from core.config import settings


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """
    Сконфигурировать structlog и корневой stdlib-логгер.

    Args:
        level: уровень (по умолчанию settings.LOG_LEVEL)
        fmt: "console" или "json" (по умолчанию settings.LOG_FORMAT)
    """
    if level is None and settings.DEBUG:
        level = "DEBUG"
    level = (level or settings.LOG_LEVEL).upper()
    fmt = fmt or settings.LOG_FORMAT

    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(message)s",
        force=True,
    )

    renderer = (
        structlog.processors.JSONRenderer()
        if fmt == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )
