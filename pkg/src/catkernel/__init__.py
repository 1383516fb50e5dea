"""Finite category kernel: categories, universal constructions, slices,
fibrations, monads and equational law checking over bounded instances."""

__version__ = "0.1.0"
