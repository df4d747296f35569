"""Ядро: настройки, логирование, исключения, случайность, log10-арифметика"""
