#/handlers/__init__.py
"""Регистрация всех команд CLI"""

from . import simulate, sweep, weights

__all__ = [
    "simulate",
    "sweep",
    "weights",
]
