"""Pairings as Breaker certificates.

A pairing is a set of disjoint vertex pairs. It is complete in a position when
every residual edge (see :func:`tokengame.core.position_view`) contains one of
its pairs; with enough spare tokens Breaker then wins by always answering a
Maker token on one vertex of a pair with a token on the other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import PASS, GameSpec, GameState, Move, Place, Player, Position, Relocate, iter_bits

log = logging.getLogger(__name__)

EXACT_SEARCH_LIMIT = 24


class SearchLimitExceeded(RuntimeError):
    pass


class StrategyInapplicable(RuntimeError):
    """A scripted strategy has no legal move that fits its plan."""


@dataclass(frozen=True)
class Pairing:
    pairs: tuple[tuple[int, int], ...]
    twin: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, pairs: Iterable[Iterable[int]] = ()):
        norm = []
        twin: dict[int, int] = {}
        for pr in pairs:
            u, v = sorted(pr)
            if u == v:
                raise ValueError(f"pair ({u}, {v}) repeats a vertex")
            if u in twin or v in twin:
                raise ValueError(f"pair ({u}, {v}) overlaps another pair")
            twin[u], twin[v] = v, u
            norm.append((u, v))
        object.__setattr__(self, "pairs", tuple(sorted(norm)))
        object.__setattr__(self, "twin", twin)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def masks(self) -> list[int]:
        return [(1 << u) | (1 << v) for u, v in self.pairs]

    def free_pairs(self, p: Position) -> int:
        """``|Pi ∩ 2^{V(P)}|``: pairs with both vertices unoccupied."""
        free = p.free
        return sum(1 for m in self.masks() if m & free == m)


def _residual_masks(p: Position) -> list[int]:
    return [e & ~p.maker for e in p.hypergraph.masks if not e & p.breaker]


def is_complete(pi: Pairing, p: Position) -> tuple[bool, list[tuple[int, ...]]]:
    """Whether every residual edge contains a pair, plus the uncovered ones."""
    pms = pi.masks()
    uncovered = [tuple(iter_bits(r)) for r in _residual_masks(p) if not any(m & r == m for m in pms)]
    return not uncovered, uncovered


def token_condition(pi: Pairing, p: Position, spec: GameSpec) -> bool:
    """``b - |B| >= min(a, |Pi ∩ 2^{V(P)}|)``."""
    n = p.hypergraph.n
    a = spec.budget(Player.MAKER, n)
    spare = spec.budget(Player.BREAKER, n) - p.breaker.bit_count()
    return spare >= min(a, pi.free_pairs(p))


def find_complete_pairing(p: Position, budget_check: Optional[GameSpec] = None,
                          limit: int = EXACT_SEARCH_LIMIT) -> Optional[Pairing]:
    """Exact backtracking search for a pairing complete in ``p``.

    Branches on the pairs inside the smallest uncovered residual edge. With
    ``budget_check`` the pairing must also satisfy :func:`token_condition`,
    which caps the number of pairs when Breaker is short of tokens.
    """
    free_count = p.free.bit_count()
    if free_count > limit:
        raise SearchLimitExceeded(f"{free_count} free vertices exceed the exact-search limit {limit}")
    residual = sorted(set(_residual_masks(p)), key=lambda r: (r.bit_count(), r))
    if any(r.bit_count() < 2 for r in residual):
        return None
    max_pairs = len(residual)
    if budget_check is not None:
        n = p.hypergraph.n
        a = budget_check.budget(Player.MAKER, n)
        spare = budget_check.budget(Player.BREAKER, n) - p.breaker.bit_count()
        if spare < 0:
            return None
        if spare < a:
            max_pairs = min(max_pairs, spare)
    all_covered = (1 << len(residual)) - 1
    failed: set[tuple[int, int]] = set()
    chosen: list[tuple[int, int]] = []

    def cover_mask(pm: int) -> int:
        c = 0
        for j, r in enumerate(residual):
            if pm & r == pm:
                c |= 1 << j
        return c

    def search(used: int, covered: int) -> bool:
        if covered == all_covered:
            return True
        if len(chosen) >= max_pairs or (used, covered) in failed:
            return False
        j = (~covered & all_covered)
        j = (j & -j).bit_length() - 1
        verts = list(iter_bits(residual[j] & ~used))
        for x in range(len(verts)):
            for y in range(x + 1, len(verts)):
                u, v = verts[x], verts[y]
                pm = (1 << u) | (1 << v)
                chosen.append((u, v))
                if search(used | pm, covered | cover_mask(pm)):
                    return True
                chosen.pop()
        failed.add((used, covered))
        return False

    if search(0, 0):
        return Pairing(chosen)
    return None


def pairing_breaker_move(pi: Pairing, s: GameState, spec: GameSpec, x: Optional[int],
                         protected: int = 0) -> Move:
    """Breaker's pairing-strategy answer to Maker having just placed on ``x``.

    ``protected`` marks Breaker tokens that must never move (his tokens from
    when the strategy was armed). Relocations take the lowest-index token that
    is neither protected nor guarding a pair whose twin Maker occupies.
    """
    if s.to_move is not Player.BREAKER:
        raise ValueError("pairing responder called on Maker's turn")
    p = s.position
    y = pi.twin.get(x) if x is not None else None
    if y is None or not p.free >> y & 1:
        return PASS
    if p.breaker.bit_count() < spec.budget(Player.BREAKER, p.hypergraph.n):
        return Place(y)
    for u in iter_bits(p.breaker & ~protected):
        t = pi.twin.get(u)
        if t is not None and p.maker >> t & 1:
            continue
        if spec.sliding and not p.hypergraph.neighbors[u] >> y & 1:
            continue
        return Relocate(u, y)
    raise StrategyInapplicable(f"no Breaker token can follow Maker to the twin {y} of {x}")


class PairingResponder:
    """Stateful pairing strategy: remembers Maker's occupancy between calls.

    Arm it with the position at arming time: Breaker's tokens there become
    protected and Maker's tokens there count as already answered.
    """

    def __init__(self, pi: Pairing, armed_at: Optional[Position] = None):
        self.pi = pi
        self.protected = armed_at.breaker if armed_at is not None else 0
        self._last_maker = armed_at.maker if armed_at is not None else 0

    def __call__(self, s: GameState, spec: GameSpec) -> Move:
        M = s.position.maker
        fresh = M & ~self._last_maker
        x = fresh.bit_length() - 1 if fresh else None
        mv = pairing_breaker_move(self.pi, s, spec, x, self.protected)
        self._last_maker = M
        return mv
