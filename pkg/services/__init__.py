"""Тестовые процессы и сценарии экспериментов"""
