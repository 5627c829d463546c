"""Brute-force minimax reference solver.

Deliberately shares nothing with the attractor solver beyond the move rules
in :mod:`tokengame.core`: it walks the game tree depth-first over
:class:`GameState` objects, scoring a return to any state on the current
line of play, or to a state already refuted during the current sweep, as a
Breaker win (the repetition rule).

A single sweep of that kind can only err in Breaker's favour: every Maker win
it reports is backed by a finite forcing tree.  Maker wins are therefore kept
across sweeps, the per-sweep Breaker verdicts are thrown away, and sweeps are
repeated until no new Maker win appears.  At that point a state that Maker
can force to a filled edge in ``r`` rounds is found by induction on ``r``, so
the root verdict is exact.
"""

from __future__ import annotations

import logging
import sys

from .core import GameSpec, GameState, Hypergraph, Player, Position, Status, apply_move, legal_moves, terminal_status

log = logging.getLogger(__name__)


class OracleLimitExceeded(RuntimeError):
    pass


def minimax_oracle(h: Hypergraph, spec: GameSpec, start: Position | GameState | None = None,
                   node_cap: int = 2_000_000) -> Player:
    """Winner of the game from ``start`` (Maker to move unless a state is given)."""
    if start is None:
        s0 = GameState(Position(h))
    elif isinstance(start, Position):
        s0 = GameState(start)
    else:
        s0 = start
    won: set[int] = set()
    visits = 0

    def sweep() -> bool:
        refuted: set[int] = set()
        on_line: set[int] = set()

        def search(s: GameState) -> bool:
            nonlocal visits
            key = s.key
            if key in won:
                return True
            if key in refuted or key in on_line:
                return False
            if terminal_status(s.position) is Status.MAKER_WIN:
                won.add(key)
                return True
            visits += 1
            if visits > node_cap:
                raise OracleLimitExceeded(f"minimax oracle visited more than {node_cap} nodes")
            on_line.add(key)
            if s.to_move is Player.MAKER:
                result = any(search(apply_move(s, mv, spec)) for mv in legal_moves(s, spec))
            else:
                result = all(search(apply_move(s, mv, spec)) for mv in legal_moves(s, spec))
            on_line.discard(key)
            (won if result else refuted).add(key)
            return result

        return search(s0)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20_000))
    try:
        rounds = 0
        while True:
            rounds += 1
            before = len(won)
            if sweep() or len(won) == before:
                break
    finally:
        sys.setrecursionlimit(limit)
    log.debug("oracle: %d sweeps, %d nodes, %d Maker wins", rounds, visits, len(won))
    return Player.MAKER if s0.key in won else Player.BREAKER
