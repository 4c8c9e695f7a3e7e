"""Change-ringing mathematics: permutations, methods, rules and unicursal search."""

from .perm import (
    Perm, Row, apply_to_row, common_fixed_point, compose, identity, inverse,
    is_transition, order, parity, rounds,
)
from .notation import format_cycles, format_row, parse_cycles, parse_row

__version__ = "0.1.0"

__all__ = [
    "Perm", "Row", "apply_to_row", "common_fixed_point", "compose", "identity", "inverse",
    "is_transition", "order", "parity", "rounds", "format_cycles", "format_row", "parse_cycles",
    "parse_row",
]
