"""Вспомогательные структуры и разбор флагов"""
