"""Eternal domination and its encoding as a token-sliding game.

Eternal domination: guards sit on a vertex set ``D``. Attacker picks an
unguarded vertex ``v``; Defender must move a guard from a neighbour of ``v``
onto ``v``. Attacker wins as soon as an attacked vertex has no guarded
neighbour, Defender wins if play goes on forever.

The encoding builds a rank-2 board on ``u_0..u_{n-1}`` (ids ``0..n-1``) and
``u'_0..u'_{n-1}`` (ids ``n..2n-1``): singletons ``{u'_i}``, pairs
``{u_i, u'_i}``, all pairs ``{u_i, u_j}``, and ``{u'_i, u'_j}`` for graph
edges. Maker holds one token on ``u_{i0}`` (``i0`` the smallest guard) and
Breaker holds ``u'_i`` for every guard; the game is (1, |D|) with sliding.
Attacker wins the domination game exactly when Maker wins the sliding game.

The domination solver below is a plain fixpoint over guard sets and shares
no code with the state-graph solver.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .core import GameSpec, Hypergraph, Player, Position, Rule, mask_of
from .reach import solve_position

log = logging.getLogger(__name__)

ED_VERTEX_CAP = 16


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        norm = set()
        for e in edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u and v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            if (u, v) in norm:
                raise ValueError(f"duplicate edge ({u}, {v})")
            norm.add((u, v))
        adj = [0] * n
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(adj))


def fig8_instance() -> tuple[Graph, frozenset[int]]:
    """Triangle ``v1 v2 v3`` with pendant ``v4`` and ``v5`` on ``v3``; guards on ``v3, v5``."""
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4)]), frozenset({2, 4})


@lru_cache(maxsize=256)
def _attacker_region(g: Graph, k: int) -> frozenset[int]:
    """Guard masks of size ``k`` from which Attacker forces a win."""
    if g.n > ED_VERTEX_CAP:
        raise ValueError(f"domination solver is limited to {ED_VERTEX_CAP} vertices")
    states = [mask_of(c) for c in itertools.combinations(range(g.n), k)]
    win: set[int] = set()
    changed = True
    while changed:
        changed = False
        for D in states:
            if D in win:
                continue
            for v in range(g.n):
                if D >> v & 1:
                    continue
                answers = [D ^ (1 << u) ^ (1 << v) for u in range(g.n) if D >> u & 1 and g.adj[v] >> u & 1]
                if all(a in win for a in answers):
                    win.add(D)
                    changed = True
                    break
    return frozenset(win)


def ed_attacker_wins(g: Graph, guards: Iterable[int]) -> bool:
    D = mask_of(guards)
    if D >> g.n:
        raise ValueError("guard outside the graph")
    return D in _attacker_region(g, D.bit_count())


def ed_defender_move(g: Graph, guards: Iterable[int], attacked: int) -> Optional[int]:
    """Lowest neighbour guard whose move onto ``attacked`` keeps Defender winning."""
    D = mask_of(guards)
    lost = _attacker_region(g, D.bit_count())
    for u in range(g.n):
        if D >> u & 1 and g.adj[attacked] >> u & 1:
            if D ^ (1 << u) ^ (1 << attacked) not in lost:
                return u
    return None


def build_sliding_position(g: Graph, guards: Iterable[int]) -> tuple[Hypergraph, Position, GameSpec]:
    D = sorted(set(guards))
    if not D:
        raise ValueError("the encoding needs at least one guard to seed Maker's token")
    n = g.n
    edges: list[tuple[int, ...]] = [(n + i,) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += list(itertools.combinations(range(n), 2))
    edges += [(n + u, n + v) for u, v in g.edges]
    h = Hypergraph(2 * n, edges)
    p = Position.of(h, maker=(D[0],), breaker=[n + i for i in D])
    return h, p, GameSpec(1, len(D), Rule.SLIDING)


@dataclass(frozen=True)
class EquivalenceReport:
    attacker_wins: bool
    maker_wins: bool

    @property
    def holds(self) -> bool:
        return self.attacker_wins == self.maker_wins


def check_reduction_equivalence(g: Graph, guards: Iterable[int]) -> EquivalenceReport:
    guards = frozenset(guards)
    attacker = ed_attacker_wins(g, guards)
    h, p, spec = build_sliding_position(g, guards)
    maker = solve_position(h, spec, p).winner is Player.MAKER
    if attacker != maker:
        log.warning("reduction mismatch on %s with guards %s: attacker=%s maker=%s",
                    g, sorted(guards), attacker, maker)
    return EquivalenceReport(attacker, maker)


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for r in range(len(pairs) + 1):
        for es in itertools.combinations(pairs, r):
            yield Graph(n, es)
