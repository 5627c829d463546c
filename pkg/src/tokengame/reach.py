"""Exact solving of token games as reachability games on the state graph.

The state graph has one node per game state reachable from the start (Maker
to move) and one arc per legal move. Maker wins exactly on the attractor of
the states in which some edge is filled; everything else is a Breaker win,
because outside the attractor Breaker can keep play away from the targets
forever (and the repetition rule scores that for him).

Two state encodings are supported:

* plain: ``M | B << n | turn << 2n``, the full game as played;
* compressed (``compress=True``): for jumping games with an unlimited Breaker.
  Breaker never relocates, and vertices lying in no live edge are dropped
  from Maker's set, so a state is ``(M & relevant, dead-edge mask, turn)``.
  Both outcome and Maker-move distance are preserved; see the test-suite for
  the cross-check against the plain encoding.
"""

from __future__ import annotations

import logging
import time
from array import array
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import (
    PASS,
    STAR,
    GameSpec,
    GameState,
    Hypergraph,
    Move,
    Place,
    Player,
    Position,
    Relocate,
    Rule,
    apply_move,
    legal_moves,
)

log = logging.getLogger(__name__)

DEFAULT_STATE_CAP = 50_000_000


class StateLimitExceeded(RuntimeError):
    pass


# Every graph built in this process, as (n, a, b, states, arcs, k_bound_ok).
# Lets a test sweep audit graph sizes after the fact.
BUILD_LOG: list[tuple[int, int, int, int, int, bool]] = []


def k_token_bounds(n: int, k: int) -> tuple[int, int]:
    """The bounds ``(2 n^{2k}, 2 k n^{2k+1})`` on states and arcs, with ``k = max(a, b)``.

    They allow ``n^k`` token sets per player, which undercounts when ``k = 1``
    (the empty set plus ``n`` singletons) or ``n = 1``; :func:`counting_bounds`
    is exact.
    """
    return 2 * n ** (2 * k), 2 * k * n ** (2 * k + 1)


def counting_bounds(n: int, a: int, b: int) -> tuple[int, int]:
    """Bounds that count every token subset and the pass arc.

    States: ``2 * S(a) * S(b)`` with ``S(j) = sum_{i<=j} C(n, i)``; out-degree is
    at most ``1 + (j + 1) * n`` for a mover holding at most ``j`` tokens.
    """
    from math import comb

    sa = sum(comb(n, i) for i in range(min(a, n) + 1))
    sb = sum(comb(n, i) for i in range(min(b, n) + 1))
    states = 2 * sa * sb
    return states, states * (1 + (max(a, b) + 1) * n)


@dataclass
class GameGraph:
    hypergraph: Hypergraph
    spec: GameSpec
    compressed: bool
    keys: list[int]
    index: dict[int, int]
    offsets: np.ndarray
    succ: np.ndarray
    target: np.ndarray
    maker_to_move: np.ndarray
    start: int = 0
    breaker_never_relocates: bool = False
    build_seconds: float = 0.0

    @property
    def num_states(self) -> int:
        return len(self.keys)

    @property
    def num_arcs(self) -> int:
        return int(self.offsets[-1])

    def successors(self, i: int) -> np.ndarray:
        return self.succ[self.offsets[i]:self.offsets[i + 1]]

    def key_of(self, s: GameState) -> int:
        if self.compressed:
            return _compressed_key(self.hypergraph, s)
        return s.key

    def decode(self, i: int) -> GameState:
        """Real game state for node ``i`` (plain encoding only)."""
        if self.compressed:
            raise ValueError("compressed states do not decode to a unique position")
        n = self.hypergraph.n
        key = self.keys[i]
        full = (1 << n) - 1
        turn = Player.BREAKER if key >> (2 * n) else Player.MAKER
        return GameState(Position(self.hypergraph, key & full, (key >> n) & full), turn)

    def effective_budgets(self) -> tuple[int, int]:
        n = self.hypergraph.n
        return self.spec.budget(Player.MAKER, n), self.spec.budget(Player.BREAKER, n)


# -- builders ----------------------------------------------------------------

def _filled_checker(masks: tuple[int, ...]) -> Callable[[int], bool]:
    cache: dict[int, bool] = {}

    def filled(M: int) -> bool:
        r = cache.get(M)
        if r is None:
            r = cache[M] = any(not e & ~M for e in masks)
        return r

    return filled


def _build_plain(h: Hypergraph, a: int, b: int, sliding: bool, never_reloc: bool,
                 start: GameState, cap: int):
    n = h.n
    full = (1 << n) - 1
    nbr = h.neighbors
    filled = _filled_checker(h.masks)
    tshift = 2 * n
    bturn = 1 << tshift

    k0 = start.key
    keys = [k0]
    index = {k0: 0}
    target = bytearray([filled(start.position.maker)])
    mtm = bytearray([start.to_move is Player.MAKER])
    offsets = array("q", [0])
    succ = array("q")
    i = 0
    while i < len(keys):
        key = keys[i]
        if target[i]:
            offsets.append(len(succ))
            i += 1
            continue
        M = key & full
        B = (key >> n) & full
        free = full & ~(M | B)
        maker = not key >> tshift
        if maker:
            mine, budget = M, a
        else:
            mine, budget = B, b
        news = [mine]
        f = free
        place = mine.bit_count() < budget
        while f:
            low = f & -f
            f ^= low
            if place:
                news.append(mine | low)
        if maker or not never_reloc:
            u_left = mine
            while u_left:
                ub = u_left & -u_left
                u_left ^= ub
                d = free & nbr[ub.bit_length() - 1] if sliding else free
                base = mine ^ ub
                while d:
                    vb = d & -d
                    d ^= vb
                    news.append(base | vb)
        for nm in news:
            if maker:
                nk = nm | (B << n) | bturn
                is_t = filled(nm)
            else:
                nk = M | (nm << n)
                is_t = False
            j = index.get(nk)
            if j is None:
                j = len(keys)
                if j >= cap:
                    raise StateLimitExceeded(f"state graph exceeds {cap} states")
                index[nk] = j
                keys.append(nk)
                target.append(is_t)
                mtm.append(not maker)
            succ.append(j)
        offsets.append(len(succ))
        i += 1
    return keys, index, offsets, succ, target, mtm


def _edges_through(h: Hypergraph) -> list[int]:
    through = [0] * h.n
    for j, e in enumerate(h.masks):
        for v in range(h.n):
            if e >> v & 1:
                through[v] |= 1 << j
    return through


def _compressed_key(h: Hypergraph, s: GameState) -> int:
    n, m = h.n, h.m
    p = s.position
    dead = 0
    relevant = 0
    for j, e in enumerate(h.masks):
        if e & p.breaker:
            dead |= 1 << j
        else:
            relevant |= e
    t = 0 if s.to_move is Player.MAKER else 1
    return (p.maker & relevant) | (dead << n) | (t << (n + m))


def _build_compressed(h: Hypergraph, a: int, start: GameState, cap: int):
    n, m = h.n, h.m
    full_n = (1 << n) - 1
    full_m = (1 << m) - 1
    masks = h.masks
    through = _edges_through(h)
    filled_cache: dict[tuple[int, int], bool] = {}
    rel_cache: dict[int, int] = {}

    def relevant(dead: int) -> int:
        r = rel_cache.get(dead)
        if r is None:
            r = 0
            live = full_m & ~dead
            while live:
                low = live & -live
                live ^= low
                r |= masks[low.bit_length() - 1]
            rel_cache[dead] = r
        return r

    def filled(M: int, dead: int) -> bool:
        kk = (M, dead)
        r = filled_cache.get(kk)
        if r is None:
            r = False
            live = full_m & ~dead
            while live:
                low = live & -live
                live ^= low
                if not masks[low.bit_length() - 1] & ~M:
                    r = True
                    break
            filled_cache[kk] = r
        return r

    tshift = n + m
    bturn = 1 << tshift
    k0 = _compressed_key(h, start)
    keys = [k0]
    index = {k0: 0}
    target = bytearray([filled(k0 & full_n, (k0 >> n) & full_m)])
    mtm = bytearray([start.to_move is Player.MAKER])
    offsets = array("q", [0])
    succ = array("q")
    i = 0
    while i < len(keys):
        key = keys[i]
        if target[i]:
            offsets.append(len(succ))
            i += 1
            continue
        M = key & full_n
        dead = (key >> n) & full_m
        R = relevant(dead)
        freeR = R & ~M
        maker = not key >> tshift
        new_keys = []
        if maker:
            dshift = dead << n
            news = [M]
            f = freeR
            place = M.bit_count() < a
            while f:
                low = f & -f
                f ^= low
                if place:
                    news.append(M | low)
            u_left = M
            while u_left:
                ub = u_left & -u_left
                u_left ^= ub
                base = M ^ ub
                d = freeR
                while d:
                    vb = d & -d
                    d ^= vb
                    news.append(base | vb)
            for nm in news:
                new_keys.append((nm | dshift | bturn, filled(nm, dead)))
        else:
            seen = {M | (dead << n)}
            new_keys.append((M | (dead << n), False))
            f = freeR
            while f:
                low = f & -f
                f ^= low
                nd = dead | through[low.bit_length() - 1]
                nk = (M & relevant(nd)) | (nd << n)
                if nk not in seen:
                    seen.add(nk)
                    new_keys.append((nk, False))
        for nk, is_t in new_keys:
            j = index.get(nk)
            if j is None:
                j = len(keys)
                if j >= cap:
                    raise StateLimitExceeded(f"state graph exceeds {cap} states")
                index[nk] = j
                keys.append(nk)
                target.append(is_t)
                mtm.append(not maker)
            succ.append(j)
        offsets.append(len(succ))
        i += 1
    return keys, index, offsets, succ, target, mtm


def build_game_graph(h: Hypergraph, spec: GameSpec, start: Position | GameState | None = None, *,
                     cap: int = DEFAULT_STATE_CAP, breaker_never_relocates: bool = False,
                     compress: bool = False, check_bounds: bool = True) -> GameGraph:
    """Enumerate the states reachable from ``start`` (Maker to move by default).

    ``breaker_never_relocates`` drops Breaker relocations; it is only sound when
    Breaker's budget is unlimited. ``compress`` additionally folds dead vertices
    away (jumping rule, unlimited Breaker only).
    """
    if start is None:
        s0 = GameState(Position(h))
    elif isinstance(start, Position):
        s0 = GameState(start)
    else:
        s0 = start
    if s0.position.hypergraph != h:
        raise ValueError("start position lives on a different hypergraph")
    n = h.n
    a = spec.budget(Player.MAKER, n)
    b = spec.budget(Player.BREAKER, n)
    if s0.position.maker.bit_count() > a or s0.position.breaker.bit_count() > b:
        raise ValueError("start position uses more tokens than the budgets allow")
    unlimited_breaker = spec.b is STAR or b >= n
    if (breaker_never_relocates or compress) and not unlimited_breaker:
        raise ValueError("breaker-never-relocates requires an unlimited Breaker budget")
    if compress and spec.rule is not Rule.JUMPING:
        raise ValueError("compression is only exact under the jumping rule")

    t0 = time.perf_counter()
    if compress:
        keys, index, offsets, succ, target, mtm = _build_compressed(h, a, s0, cap)
    else:
        keys, index, offsets, succ, target, mtm = _build_plain(
            h, a, b, spec.rule is Rule.SLIDING, breaker_never_relocates, s0, cap)
    g = GameGraph(
        hypergraph=h,
        spec=spec,
        compressed=compress,
        keys=keys,
        index=index,
        offsets=np.frombuffer(offsets, dtype=np.int64).copy(),
        succ=np.frombuffer(succ, dtype=np.int64).copy() if len(succ) else np.zeros(0, dtype=np.int64),
        target=np.frombuffer(bytes(target), dtype=np.uint8).astype(bool),
        maker_to_move=np.frombuffer(bytes(mtm), dtype=np.uint8).astype(bool),
        breaker_never_relocates=breaker_never_relocates or compress,
        build_seconds=time.perf_counter() - t0,
    )
    k = max(a, b)
    ps, pa = k_token_bounds(n, k)
    k_bound_ok = g.num_states <= ps and g.num_arcs <= pa
    BUILD_LOG.append((n, a, b, g.num_states, g.num_arcs, k_bound_ok))
    if check_bounds:
        cs, ca = counting_bounds(n, a, b)
        assert g.num_states <= cs and g.num_arcs <= ca, (
            f"graph size {g.num_states}/{g.num_arcs} exceeds counting bound {cs}/{ca}")
        if not k_bound_ok:
            log.debug("graph n=%d a=%d b=%d has %d states/%d arcs, above 2n^2k=%d/2kn^(2k+1)=%d",
                      n, a, b, g.num_states, g.num_arcs, ps, pa)
    return g


# -- attractor ---------------------------------------------------------------

@dataclass
class SolveResult:
    """Attractor labels. ``distance[i]`` is the number of Maker moves Maker
    needs to force a fill from state ``i`` (``-1`` where Breaker wins)."""

    graph: GameGraph
    distance: np.ndarray
    seconds: float = 0.0

    @property
    def maker_wins(self) -> np.ndarray:
        return self.distance >= 0

    def winner(self, i: int) -> Player:
        return Player.MAKER if self.distance[i] >= 0 else Player.BREAKER

    def best_successor(self, i: int) -> Optional[int]:
        """Optimal successor of node ``i``; ties go to the smallest index."""
        g = self.graph
        succ = g.successors(i)
        if len(succ) == 0:
            return None
        d = self.distance[succ]
        order = np.argsort(succ, kind="stable")
        succ, d = succ[order], d[order]
        if g.maker_to_move[i]:
            win = d >= 0
            if win.any():
                best = d[win].min()
                return int(succ[win & (d == best)][0])
            return int(succ[0])
        lose = d < 0
        if lose.any():
            return int(succ[lose][0])
        return int(succ[d == d.max()][0])


def attractor_solve(g: GameGraph) -> SolveResult:
    """Backward-counting attractor with Maker-move layering.

    A Maker node takes ``1 + min`` over successors, a Breaker node joins the
    attractor once every successor has, at the ``max`` of their distances.
    Buckets are processed in increasing distance so both come out right.
    """
    t0 = time.perf_counter()
    S = g.num_states
    deg = np.diff(g.offsets)
    src = np.repeat(np.arange(S, dtype=np.int64), deg)
    order = np.argsort(g.succ, kind="stable")
    pred = src[order].tolist()
    pred_off = np.concatenate(([0], np.cumsum(np.bincount(g.succ, minlength=S)))).tolist()
    remaining = deg.tolist()
    maker = g.maker_to_move.tolist()
    dist = [-1] * S
    bucket = [int(i) for i in np.flatnonzero(g.target)]
    for i in bucket:
        dist[i] = 0
    d = 0
    while bucket:
        nxt = []
        k = 0
        while k < len(bucket):
            t = bucket[k]
            k += 1
            for p in pred[pred_off[t]:pred_off[t + 1]]:
                if dist[p] >= 0:
                    continue
                if maker[p]:
                    dist[p] = d + 1
                    nxt.append(p)
                else:
                    remaining[p] -= 1
                    if remaining[p] == 0:
                        dist[p] = d
                        bucket.append(p)
        bucket = nxt
        d += 1
    return SolveResult(g, np.array(dist, dtype=np.int64), time.perf_counter() - t0)


# -- high-level --------------------------------------------------------------

@dataclass
class Solution:
    winner: Player
    distance: Optional[int]
    first_move: Optional[Move]
    states: int
    arcs: int
    result: SolveResult = field(repr=False)

    @property
    def graph(self) -> GameGraph:
        return self.result.graph


def move_between(g: GameGraph, s: GameState, j: int) -> Move:
    """The legal move from ``s`` whose successor is node ``j``."""
    for mv in legal_moves(s, g.spec):
        if g.index.get(g.key_of(apply_move(s, mv, g.spec))) == j:
            return mv
    raise LookupError(f"no legal move leads to node {j}")


def solve_position(h: Hypergraph, spec: GameSpec, start: Position | GameState | None = None,
                   **build_opts) -> Solution:
    g = build_game_graph(h, spec, start, **build_opts)
    res = attractor_solve(g)
    s0 = start if isinstance(start, GameState) else GameState(start if start is not None else Position(h))
    d = int(res.distance[g.start])
    first = None
    if d > 0 and g.maker_to_move[g.start]:
        first = move_between(g, s0, res.best_successor(g.start))
    return Solution(
        winner=Player.MAKER if d >= 0 else Player.BREAKER,
        distance=d if d >= 0 else None,
        first_move=first,
        states=g.num_states,
        arcs=g.num_arcs,
        result=res,
    )


class OptimalPlay:
    """Value oracle for arbitrary states of one game, backed by solved graphs.

    States outside every graph built so far trigger a fresh solve from that
    state. With ``compress=True`` Breaker relocations are never proposed.
    """

    def __init__(self, h: Hypergraph, spec: GameSpec, *, compress: bool = False,
                 cap: int = DEFAULT_STATE_CAP):
        self.h = h
        self.spec = spec
        self.compress = compress
        self.cap = cap
        self.results: list[SolveResult] = []

    def _locate(self, s: GameState) -> tuple[SolveResult, int]:
        for res in self.results:
            j = res.graph.index.get(res.graph.key_of(s))
            if j is not None:
                return res, j
        g = build_game_graph(self.h, self.spec, s, cap=self.cap, compress=self.compress)
        res = attractor_solve(g)
        self.results.append(res)
        return res, g.start

    def value(self, s: GameState) -> int:
        """Maker-move distance to a forced fill, or -1 if Breaker wins."""
        res, j = self._locate(s)
        return int(res.distance[j])

    def choose(self, s: GameState) -> Move:
        res, i = self._locate(s)
        g = res.graph
        best = res.best_successor(i)
        if best is None:
            return PASS
        for mv in legal_moves(s, self.spec):
            if self.compress and s.to_move is Player.BREAKER and isinstance(mv, Relocate):
                continue
            if g.index.get(g.key_of(apply_move(s, mv, self.spec))) == best:
                return mv
        raise LookupError("optimal successor has no matching legal move")
