"""Token and round thresholds.

``theta(H)`` is the least ``a`` for which Maker wins the (a,*)-game, and
``tau(H)`` the least number of rounds in which Maker forces a win in the
(*,*)-game; both are infinite when Breaker wins the (*,*)-game. Since
``ark(H) <= theta <= tau <= ceil(n/2)``, theta is searched upward from the
antirank.
"""

from __future__ import annotations

import logging
import math
from typing import Union

from .core import STAR, GameSpec, Hypergraph, Player
from .reach import DEFAULT_STATE_CAP, solve_position

log = logging.getLogger(__name__)

Threshold = Union[int, float]
INF = math.inf


def _solve(h: Hypergraph, a, cap: int):
    # (a,*) jumping: Breaker never benefits from relocating, so the compressed
    # encoding is exact and much smaller
    return solve_position(h, GameSpec(a, STAR), cap=cap, compress=True)


def tau(h: Hypergraph, cap: int = DEFAULT_STATE_CAP) -> Threshold:
    sol = _solve(h, STAR, cap)
    return sol.distance if sol.winner is Player.MAKER else INF


def theta(h: Hypergraph, cap: int = DEFAULT_STATE_CAP) -> Threshold:
    if not h.edges:
        return INF
    if _solve(h, STAR, cap).winner is Player.BREAKER:
        return INF
    lo = max(1, h.antirank)
    hi = max(lo, math.ceil(h.n / 2))
    for a in range(lo, h.n + 1):
        if a > hi:
            log.warning("theta search passed ceil(n/2)=%d on %s", hi, h)
        if _solve(h, a, cap).winner is Player.MAKER:
            return a
    raise AssertionError("Maker wins the (*,*)-game but no finite budget up to n wins")
