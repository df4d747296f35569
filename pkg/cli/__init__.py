"""Командная строка conformal-markov"""
