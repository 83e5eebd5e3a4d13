"""Exact computations around supports of type-A rational Cherednik algebra
representations: partition strata, character weights, the deformed polynomial
representation, Fock-space counting and Hecke simple modules."""

__version__ = "0.1.0"

from . import characters, dunkl, fock, hecke, partitions, serialize  # noqa: F401
