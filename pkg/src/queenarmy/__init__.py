"""Placements of k queens on an n x n board that attack few squares, with
matching upper-bound constructions, lower-bound certificates and exact
search at small sizes."""

from __future__ import annotations

__version__ = "0.1.0"

from .analysis import (
    LineSelection,
    lower_bound_certificate,
    max_nonsharing_queens,
    min_diag_cover,
    ring_bound_check,
    rings_of,
)
from .board import Line, LineKind, Placement, Square, attacked_count, covered_count, lines_of
from .constructions import construct_best, four_corner, nine_queens, uneven_hexagon
from .errors import BudgetExceeded, DomainError
from .formulas import F_closed, F_of, g_of, m_star
from .search import exact_min_covered, max_triple_points

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "F_closed",
    "F_of",
    "Line",
    "LineKind",
    "LineSelection",
    "Placement",
    "Square",
    "attacked_count",
    "construct_best",
    "covered_count",
    "exact_min_covered",
    "four_corner",
    "g_of",
    "lines_of",
    "lower_bound_certificate",
    "m_star",
    "max_nonsharing_queens",
    "max_triple_points",
    "min_diag_cover",
    "nine_queens",
    "ring_bound_check",
    "rings_of",
    "uneven_hexagon",
]
