"""Deterministic generators for the hypergraph families studied here.

Every generator numbers its vertices in a fixed documented order so that the
scripted strategies in :mod:`tokengame.strategies` can address them by role;
the ``*Layout`` classes hold that numbering.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .core import STAR, Budget, Hypergraph, Player, Position
from .pairing import Pairing


# -- nunchaku and necklace ---------------------------------------------------

@dataclass(frozen=True)
class NunchakuLayout:
    """``a_0..a_L`` are ``0..L``, ``b_1..b_L`` are ``L+1..2L``."""

    L: int

    def a(self, i: int) -> int:
        return i

    def b(self, i: int) -> int:
        return self.L + i


def nunchaku(L: int) -> Position:
    """Path of 3-edges ``{a_{i-1}, b_i, a_i}`` with Maker tokens on both ends."""
    if L < 1:
        raise ValueError(f"nunchaku length must be at least 1, got {L}")
    lay = NunchakuLayout(L)
    edges = [(lay.a(i - 1), lay.b(i), lay.a(i)) for i in range(1, L + 1)]
    h = Hypergraph(2 * L + 1, edges)
    assert h.n == 2 * L + 1 and h.m == L
    return Position.of(h, maker=(lay.a(0), lay.a(L)))


@dataclass(frozen=True)
class NecklaceLayout:
    """``a_1..a_L`` are ``0..L-1``, ``b_1..b_L`` are ``L..2L-1``."""

    L: int

    def a(self, i: int) -> int:
        return (i - 1) % self.L

    def b(self, i: int) -> int:
        return self.L + (i - 1) % self.L


def necklace(L: int) -> Position:
    """Cycle of 3-edges ``{a_i, b_i, a_{i+1}}`` with one Maker token on ``a_1``."""
    if L < 2:
        raise ValueError(f"necklace length must be at least 2, got {L}")
    lay = NecklaceLayout(L)
    edges = [(lay.a(i), lay.b(i), lay.a(i + 1)) for i in range(1, L + 1)]
    h = Hypergraph(2 * L, edges)
    assert h.n == 2 * L and h.m == L
    return Position.of(h, maker=(lay.a(1),))


@dataclass(frozen=True)
class DiamondNunchakuLayout:
    """Nunchaku core as in :class:`NunchakuLayout`, then the diamond
    ``(x, p, q)`` at ``a_0`` and the one at ``a_L``; a parity pad comes last."""

    L: int

    @property
    def core(self) -> NunchakuLayout:
        return NunchakuLayout(self.L)

    def diamond(self, end: int) -> tuple[int, int, int]:
        base = 2 * self.L + 1 + 3 * end
        return base, base + 1, base + 2


def diamond_nunchaku(n: int) -> Hypergraph:
    """Token-free nunchaku: each end token becomes a diamond ``{y,x,p}, {y,x,q}``.

    Odd ``n >= 9`` gives ``L = (n - 7) / 2``; even ``n`` adds one isolated vertex.
    """
    if n < 9:
        raise ValueError(f"diamond nunchaku needs n >= 9 (smaller wirings are ambiguous), got {n}")
    if n % 2 == 0:
        return diamond_nunchaku(n - 1).with_isolated(1)
    L = (n - 7) // 2
    lay = DiamondNunchakuLayout(L)
    core = lay.core
    edges = [(core.a(i - 1), core.b(i), core.a(i)) for i in range(1, L + 1)]
    for end, y in enumerate((core.a(0), core.a(L))):
        x, p, q = lay.diamond(end)
        edges += [(y, x, p), (y, x, q)]
    h = Hypergraph(2 * L + 7, edges)
    assert h.n == n and h.is_uniform(3)
    return h


# -- Breaker with one token --------------------------------------------------

def k_vs_1(k: int) -> Hypergraph:
    """k-uniform board with ``floor(k/2) + 1`` edges on which Maker wins the (k,1)-game.

    ``u_1..u_k`` are ``0..k-1``; the private vertices of ``e_1, e_2, ...`` follow.
    Edge ``e_i`` holds ``k - 1 - 2(K - i)`` private vertices and the tail
    ``u_{k-2(K-i)}..u_k``, where ``K = floor(k/2)``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    K = k // 2
    edges = [tuple(range(k))]
    nxt = k
    for i in range(1, K + 1):
        own = k - 1 - 2 * (K - i)
        tail = range(k - 2 * (K - i) - 1, k)
        edges.append(tuple(range(nxt, nxt + own)) + tuple(tail))
        nxt += own
    h = Hypergraph(nxt, edges)
    assert h.is_uniform(k) and h.m == K + 1
    return h


# -- +1 lift -----------------------------------------------------------------

def lift_plus_one(h: Hypergraph) -> Hypergraph:
    """(k+1)-uniform board on ``n + 2`` vertices, new vertices ``v = n``, ``v̄ = n+1``.

    Edges: ``e + {v}`` for every edge, and ``{v, v̄} + U`` for every
    ``(k-1)``-subset ``U`` of the old vertices.
    """
    if not h.edges:
        raise ValueError("lift needs at least one edge to fix the uniformity")
    k = h.rank
    if not h.is_uniform(k):
        raise ValueError("lift needs a uniform hypergraph")
    v, vbar = h.n, h.n + 1
    e1 = [e + (v,) for e in h.edges]
    e2 = [U + (v, vbar) for U in itertools.combinations(range(h.n), k - 1)]
    lifted = Hypergraph(h.n + 2, e1 + e2)
    assert lifted.is_uniform(k + 1) and lifted.n == h.n + 2
    return lifted


# -- biggap ------------------------------------------------------------------

@dataclass(frozen=True)
class BiggapLayout:
    """Numbering for the 4-uniform base on odd ``n``, ``L = (n - 3) / 2``.

    ``a_1..a_{L+1}`` are ``0..L``, ``b_1..b_L`` are ``L+1..2L``, then ``ā_1, ā_2``.
    ``u_1..u_5`` reuse the first five of ``a_3..a_{L+1}, b_1..b_L``.
    """

    L: int

    def a(self, i: int) -> int:
        return i - 1

    def b(self, i: int) -> int:
        return self.L + i

    def abar(self, i: int) -> int:
        return 2 * self.L + i

    @property
    def u(self) -> tuple[int, ...]:
        pool = [self.a(i) for i in range(3, self.L + 2)] + [self.b(i) for i in range(1, self.L + 1)]
        return tuple(pool[:5])

    def e(self, i: int) -> tuple[int, ...]:
        if i == self.L:
            return (self.a(self.L), self.a(self.L + 1), self.a(1), self.b(self.L))
        return (self.a(i), self.a(i + 1), self.a(i + 2), self.b(i))


def biggap(k: int, n: int) -> Hypergraph:
    """k-uniform board on ``n`` vertices with theta = k and tau = ceil(n/2).

    ``k = 4`` is built directly (odd ``n``; even ``n`` gets an isolated vertex);
    larger ``k`` applies :func:`lift_plus_one` to the 4-uniform board on
    ``n - 2(k-4)`` vertices.
    """
    if k < 4:
        raise ValueError(f"biggap needs k >= 4, got {k}")
    if n < 2 * k + 1:
        raise ValueError(f"biggap needs n >= 2k+1 = {2 * k + 1}, got {n}")
    if k > 4:
        h = biggap(4, n - 2 * (k - 4))
        for _ in range(k - 4):
            h = lift_plus_one(h)
        assert h.n == n and h.is_uniform(k)
        return h
    if n % 2 == 0:
        return biggap(4, n - 1).with_isolated(1)
    lay = BiggapLayout((n - 3) // 2)
    edges = [lay.e(i) for i in range(1, lay.L + 1)]
    for i in (1, 2):
        for j, jj in itertools.combinations(lay.u, 2):
            edges.append((lay.a(i), lay.abar(i), j, jj))
    h = Hypergraph(n, edges)
    assert h.n == n and h.is_uniform(4) and h.m == lay.L + 20
    return h


# -- bigtheta ----------------------------------------------------------------

@dataclass(frozen=True)
class BigthetaLayout:
    """``a_0..a_{2N}``, ``b_1..b_{2N}``, ``c_1..c_N``, ``c̄_1..c̄_N``, ``ā_0``,
    ``ā_{2N}``, ``u_1..u_5``, numbered consecutively in that order."""

    N: int

    def a(self, i: int) -> int:
        return i

    def b(self, i: int) -> int:
        return 2 * self.N + i

    def c(self, i: int) -> int:
        return 4 * self.N + i

    def cbar(self, i: int) -> int:
        return 5 * self.N + i

    @property
    def abar0(self) -> int:
        return 6 * self.N + 1

    @property
    def abar2N(self) -> int:
        return 6 * self.N + 2

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(range(6 * self.N + 3, 6 * self.N + 8))

    @property
    def guarded(self) -> tuple[tuple[int, int], ...]:
        """``(v, v̄)`` for ``v`` in ``a_0, a_{2N}, c_1..c_N``."""
        N = self.N
        return ((self.a(0), self.abar0), (self.a(2 * N), self.abar2N)) + tuple(
            (self.c(i), self.cbar(i)) for i in range(1, N + 1))

    def e(self, i: int) -> tuple[int, ...]:
        c = self.c(i) if i <= self.N else self.c(i - self.N)
        return (self.a(i - 1), self.a(i), self.b(i), c)


def bigtheta(N: int) -> tuple[Hypergraph, Pairing]:
    """4-uniform board on ``6N + 8`` vertices with theta = N + 2, and its pairing.

    The pairing covers every edge except ``e_N``.
    """
    if N < 2:
        raise ValueError(f"bigtheta needs N >= 2, got {N}")
    lay = BigthetaLayout(N)
    edges = [lay.e(i) for i in range(1, 2 * N + 1)]
    for v, vbar in lay.guarded:
        for j, jj in itertools.combinations(lay.u, 2):
            edges.append((v, vbar, j, jj))
    h = Hypergraph(6 * N + 8, edges)
    assert h.is_uniform(4) and h.m == 2 * N + 10 * (N + 2)
    pairs = list(lay.guarded)
    pairs += [(lay.a(i), lay.b(i)) for i in range(1, N)]
    pairs += [(lay.a(i), lay.b(i + 1)) for i in range(N, 2 * N)]
    return h, Pairing(pairs)


# -- 2-uniform law -----------------------------------------------------------

def two_uniform_outcome(h: Hypergraph, a: Budget, b: Budget) -> Player:
    """Closed-form winner of the (a,b)-game on a graph (all edges of size 2), a >= 2."""
    if not h.is_uniform(2):
        raise ValueError("two_uniform_outcome needs every edge to have size 2")
    aa = h.n if a is STAR else a
    bb = h.n if b is STAR else b
    if aa < 2:
        raise ValueError(f"the closed form needs a >= 2, got {a}")
    seen = 0
    disjoint = True
    for m in h.masks:
        if m & seen:
            disjoint = False
            break
        seen |= m
    if disjoint and bb >= min(aa, h.m):
        return Player.BREAKER
    return Player.MAKER


# -- random instances --------------------------------------------------------

def random_hypergraph(rng: random.Random, n: int, m: int, p: float = 0.5) -> Hypergraph:
    """``m`` edges, each vertex joining each edge with probability ``p`` (empty edges resampled)."""
    edges = []
    while len(edges) < m and n > 0:
        e = tuple(v for v in range(n) if rng.random() < p)
        if e:
            edges.append(e)
    return Hypergraph(n, edges)


def random_uniform(rng: random.Random, n: int, k: int, m: int) -> Hypergraph:
    """``m`` distinct ``k``-subsets of ``range(n)`` (fewer if not that many exist)."""
    from math import comb

    m = min(m, comb(n, k))
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < m:
        chosen.add(tuple(sorted(rng.sample(range(n), k))))
    return Hypergraph(n, sorted(chosen))
