"""Exact Poisson bracket tables on the affine charts of Bott-Samelson varieties."""
from __future__ import annotations

from .bracket import BracketTable, bracket_table, extract_ore_data, sigma_closed, sigma_recursive
from .chevalley import StructureTable, build_chevalley, c_coeff
from .poly import Polynomial, parse_polynomial
from .rootsys import RootSystem, build_root_system
from .verify import VerificationReport, run_checks, structure_for

__all__ = [
    "BracketTable",
    "Polynomial",
    "RootSystem",
    "StructureTable",
    "VerificationReport",
    "bracket_table",
    "build_chevalley",
    "build_root_system",
    "c_coeff",
    "extract_ore_data",
    "parse_polynomial",
    "run_checks",
    "sigma_closed",
    "sigma_recursive",
    "structure_for",
]
