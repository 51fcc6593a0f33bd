"""Graded attribute implications over finite chains of truth degrees."""

from .errors import (BudgetExceeded, DomainError, FormatError, GradimpError,
                     HedgeError, PreconditionError)
from .fsets import AttributeUniverse, LSet, make_universe, parse_lset
from .implications import Implication, Theory, parse_implication, parse_theory
from .lattice import ChainLattice, parse_config
from .tables import DataTable, parse_table

__all__ = [
    "AttributeUniverse", "BudgetExceeded", "ChainLattice", "DataTable", "DomainError",
    "FormatError", "GradimpError", "HedgeError", "Implication", "LSet", "PreconditionError",
    "Theory", "make_universe", "parse_config", "parse_implication", "parse_lset",
    "parse_table", "parse_theory",
]
