"""Polynomial-time solver for games in which Breaker has a single token.

Two distinct edges ``e1, e2`` form an *a-reducible* pair when
``|e1 ∩ e2| >= |e1| + |e2| - a - 2``. Replacing such a pair by its
intersection does not change the winner of the (a,1)-game, and once no
reducible pair is left Maker wins exactly when some edge has at most one
vertex.

Edges with more than ``a`` vertices are dropped first: Maker can never fill
them, and contracting them is unsound. On the triangle with ``a = 1`` every
pair is 1-reducible and a contraction yields a singleton edge, yet one token
never fills a 2-edge. Once every edge fits in ``a`` tokens, Maker always has
the spare or movable token that closing the second edge of a pair needs. At most ``m - 1`` contractions happen, each found by an ``O(m^2)``
scan, for ``O(m^3)`` overall.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Hypergraph, Player

Edge = frozenset


def is_a_reducible(e1: Iterable[int], e2: Iterable[int], a: int) -> bool:
    s1, s2 = frozenset(e1), frozenset(e2)
    if s1 == s2:
        raise ValueError("a reducible pair needs two distinct edges")
    return len(s1 & s2) >= len(s1) + len(s2) - a - 2


@dataclass(frozen=True)
class Contraction:
    e1: tuple[int, ...]
    e2: tuple[int, ...]
    merged: tuple[int, ...]

    def __str__(self) -> str:
        def fmt(e):
            return "{" + ",".join(map(str, e)) + "}"
        return f"{fmt(self.e1)} + {fmt(self.e2)} -> {fmt(self.merged)}"


@dataclass(frozen=True)
class ReductionResult:
    winner: Player
    trace: tuple[Contraction, ...]
    final_edges: tuple[tuple[int, ...], ...]


def _find_pair(edges: list[frozenset], a: int, rng: Optional[random.Random]) -> Optional[tuple[int, int]]:
    m = len(edges)
    if rng is None:
        for i in range(m):
            for j in range(i + 1, m):
                if len(edges[i] & edges[j]) >= len(edges[i]) + len(edges[j]) - a - 2:
                    return i, j
        return None
    found = [(i, j) for i in range(m) for j in range(i + 1, m)
             if len(edges[i] & edges[j]) >= len(edges[i]) + len(edges[j]) - a - 2]
    return rng.choice(found) if found else None


def solve_a1(h: Hypergraph, a: int, rng: Optional[random.Random] = None) -> ReductionResult:
    """Winner of the (a,1)-game on ``h`` from the empty position.

    Edges larger than ``a`` are discarded up front and do not appear in the
    trace or in ``final_edges``.

    The lexicographically first reducible ``(i, j)`` of the current edge list is
    contracted, the intersection taking the place of edge ``i``. With ``rng`` a
    uniformly random reducible pair is taken instead; the verdict does not
    depend on the order.
    """
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"Maker budget must be a positive integer, got {a!r}")
    edges: list[frozenset] = []
    for e in h.edges:
        fe = frozenset(e)
        if len(fe) <= a and fe not in edges:
            edges.append(fe)
    trace: list[Contraction] = []
    while not any(len(e) <= 1 for e in edges):
        ij = _find_pair(edges, a, rng)
        if ij is None:
            break
        i, j = ij
        e1, e2 = edges[i], edges[j]
        merged = e1 & e2
        trace.append(Contraction(tuple(sorted(e1)), tuple(sorted(e2)), tuple(sorted(merged))))
        # the intersection takes e1's slot; an exact duplicate is dropped
        rest = [e for k, e in enumerate(edges) if k not in (i, j)]
        if merged not in rest:
            rest.insert(i, merged)
        edges = rest
    winner = Player.MAKER if any(len(e) <= 1 for e in edges) else Player.BREAKER
    return ReductionResult(winner, tuple(trace), tuple(tuple(sorted(e)) for e in edges))
