"""Exact solvers, constructions and strategies for Maker-Breaker token games."""

from .core import (
    PASS,
    STAR,
    GameSpec,
    GameState,
    Hypergraph,
    Place,
    Player,
    Position,
    Relocate,
    Rule,
    apply_move,
    legal_moves,
)
from .reach import solve_position
from .thresholds import tau, theta

__all__ = [
    "PASS", "STAR", "GameSpec", "GameState", "Hypergraph", "Place", "Player", "Position",
    "Relocate", "Rule", "apply_move", "legal_moves", "solve_position", "tau", "theta",
]
