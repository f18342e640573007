"""Módulo de mocks para testes."""

from .mutant_seg_dicts import MUTANTS

__all__ = ["MUTANTS"]
