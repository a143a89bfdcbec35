"""Upsilon invariants of L-space knots in exact arithmetic."""

from .exactmath import CycloZ6, LaurentPoly, PLFunction, TriLaurentPoly, parse_laurent
from .upsilon import FormalSemigroup, InvariantReport, formal_semigroup, report

__version__ = "0.1.0"
