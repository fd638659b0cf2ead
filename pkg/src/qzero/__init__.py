"""Exact symbolic computation for the chiral and 2D zero-mode algebras of
the SU(n) WZNW model at roots of unity."""

from .field import CycNum, FieldContext
from .pcoeff import PCoeff, SymbolRing
from .algebra import Algebra, AlgElement
from .fock import (
    FockModule,
    PoleObstruction,
    build_module,
    gram,
    n2_closed_form,
    verify_module,
)
from .matrix import SparseMat, commutator
from .parser import ParseError, parse_expr
from .qops import QSystem, get_system
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgElement",
    "CycNum",
    "FieldContext",
    "FockModule",
    "PCoeff",
    "ParseError",
    "PoleObstruction",
    "QSystem",
    "Report",
    "SparseMat",
    "SymbolRing",
    "build_module",
    "commutator",
    "get_system",
    "gram",
    "n2_closed_form",
    "parse_expr",
    "verify_module",
]
