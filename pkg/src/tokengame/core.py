"""Boards, positions and move generation for Maker-Breaker token games.

Vertices are integers ``0..n-1`` and every vertex set that the solvers touch
is kept as an ``int`` bitmask (bit ``v`` set iff vertex ``v`` is in the set).
The frozen dataclasses below expose set-valued views for readability, but the
masks are what hash, compare and travel through the search code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Union


class Player(enum.Enum):
    MAKER = "maker"
    BREAKER = "breaker"

    @property
    def other(self) -> Player:
        return Player.BREAKER if self is Player.MAKER else Player.MAKER


class Rule(enum.Enum):
    JUMPING = "jumping"
    SLIDING = "sliding"


class Status(enum.Enum):
    MAKER_WIN = "maker-win"
    BREAKER_CERTIFIED = "breaker-certified"
    ONGOING = "ongoing"


class _Unlimited:
    """Budget symbol for a player who never runs out of tokens."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "STAR"

    def __str__(self) -> str:
        return "*"

    def __reduce__(self):
        return (_Unlimited, ())


STAR = _Unlimited()
Budget = Union[int, _Unlimited]


class IllegalMoveError(ValueError):
    pass


# -- bit helpers -------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


# -- board -------------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """A board: ``n`` vertices and an ordered list of edges.

    Edges are stored as sorted tuples; exact duplicates are dropped (first
    occurrence wins) but supersets of other edges are kept, because they still
    license slide moves.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    neighbors: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        normalized = []
        for e in edges:
            t = tuple(sorted(set(e)))
            for v in t:
                if not 0 <= v < n:
                    raise ValueError(f"edge {t} uses vertex {v} outside [0, {n})")
            if t not in seen:
                seen.add(t)
                normalized.append(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))
        masks = tuple(mask_of(e) for e in normalized)
        object.__setattr__(self, "masks", masks)
        nbr = [0] * n
        for m in masks:
            for v in iter_bits(m):
                nbr[v] |= m
        object.__setattr__(self, "neighbors", tuple(x & ~(1 << v) for v, x in enumerate(nbr)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def rank(self) -> int:
        if not self.edges:
            raise ValueError("rank is undefined for a hypergraph without edges")
        return max(len(e) for e in self.edges)

    @property
    def antirank(self) -> int:
        if not self.edges:
            raise ValueError("antirank is undefined for a hypergraph without edges")
        return min(len(e) for e in self.edges)

    ark = antirank

    def is_uniform(self, k: int | None = None) -> bool:
        sizes = {len(e) for e in self.edges}
        if k is None:
            return len(sizes) <= 1
        return sizes <= {k}

    def with_isolated(self, extra: int) -> Hypergraph:
        return Hypergraph(self.n + extra, self.edges)

    def __str__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"


# -- positions and states ----------------------------------------------------

@dataclass(frozen=True)
class Position:
    """Board plus Maker's and Breaker's occupied vertices (as bitmasks)."""

    hypergraph: Hypergraph
    maker: int = 0
    breaker: int = 0

    def __post_init__(self):
        if self.maker & self.breaker:
            raise ValueError("Maker and Breaker occupy a common vertex")
        if (self.maker | self.breaker) >> self.hypergraph.n:
            raise ValueError("occupied vertex outside the board")

    @classmethod
    def of(cls, h: Hypergraph, maker: Iterable[int] = (), breaker: Iterable[int] = ()) -> Position:
        return cls(h, mask_of(maker), mask_of(breaker))

    @property
    def maker_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.maker))

    @property
    def breaker_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.breaker))

    @property
    def free(self) -> int:
        return self.hypergraph.full_mask & ~(self.maker | self.breaker)


@dataclass(frozen=True)
class GameSpec:
    a: Budget
    b: Budget
    rule: Rule = Rule.JUMPING

    def __post_init__(self):
        for name in ("a", "b"):
            x = getattr(self, name)
            if x is not STAR and (not isinstance(x, int) or x < 1):
                raise ValueError(f"budget {name} must be a positive integer or STAR, got {x!r}")

    def budget(self, player: Player, n: int) -> int:
        """Effective token count; STAR means one token per vertex."""
        x = self.a if player is Player.MAKER else self.b
        return n if x is STAR else x

    @property
    def sliding(self) -> bool:
        return self.rule is Rule.SLIDING

    def __str__(self) -> str:
        return f"({self.a},{self.b})-{self.rule.value}"


@dataclass(frozen=True)
class GameState:
    position: Position
    to_move: Player = Player.MAKER

    @property
    def key(self) -> int:
        """Canonical integer: M | B << n | turn << 2n (turn 1 = Breaker)."""
        n = self.position.hypergraph.n
        t = 0 if self.to_move is Player.MAKER else 1
        return self.position.maker | (self.position.breaker << n) | (t << (2 * n))

    @classmethod
    def initial(cls, h: Hypergraph) -> GameState:
        return cls(Position(h))


# -- moves -------------------------------------------------------------------

class Place(NamedTuple):
    v: int

    def __str__(self):
        return f"place {self.v}"


class Relocate(NamedTuple):
    src: int
    dst: int

    def __str__(self):
        return f"move {self.src} {self.dst}"


class _Pass:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "PASS"

    def __str__(self):
        return "pass"

    def __reduce__(self):
        return (_Pass, ())


PASS = _Pass()
Move = Union[Place, Relocate, _Pass]


def position_view(p: Position) -> tuple[frozenset[int], list[frozenset[int]]]:
    """Free vertices and residual edges ``{e - M : e disjoint from B}``."""
    free = frozenset(iter_bits(p.free))
    residual = [frozenset(iter_bits(e & ~p.maker)) for e in p.hypergraph.masks if not e & p.breaker]
    return free, residual


def legal_moves(s: GameState, spec: GameSpec) -> list[Move]:
    """Pass, then placements (ascending), then relocations (lexicographic)."""
    p = s.position
    h = p.hypergraph
    mine = p.maker if s.to_move is Player.MAKER else p.breaker
    free = p.free
    moves: list[Move] = [PASS]
    if mine.bit_count() < spec.budget(s.to_move, h.n):
        moves.extend(Place(v) for v in iter_bits(free))
    sliding = spec.rule is Rule.SLIDING
    for u in iter_bits(mine):
        dests = free & h.neighbors[u] if sliding else free
        moves.extend(Relocate(u, v) for v in iter_bits(dests))
    return moves


def apply_move(s: GameState, m: Move, spec: GameSpec | None = None) -> GameState:
    """Play ``m`` for the player to move.

    Without ``spec`` only occupancy is checked (unlimited budgets, jumping).
    """
    p = s.position
    h = p.hypergraph
    maker_moves = s.to_move is Player.MAKER
    mine = p.maker if maker_moves else p.breaker
    who = s.to_move.value
    if m is PASS:
        new_mine = mine
    elif isinstance(m, Place):
        if not 0 <= m.v < h.n:
            raise IllegalMoveError(f"{who} cannot place on {m.v}: not a vertex")
        if not p.free >> m.v & 1:
            raise IllegalMoveError(f"{who} cannot place on {m.v}: vertex occupied")
        if spec is not None and mine.bit_count() >= spec.budget(s.to_move, h.n):
            raise IllegalMoveError(f"{who} cannot place on {m.v}: no unused token")
        new_mine = mine | (1 << m.v)
    elif isinstance(m, Relocate):
        if not (0 <= m.src < h.n and 0 <= m.dst < h.n):
            raise IllegalMoveError(f"{who} cannot relocate {m.src}->{m.dst}: not a vertex")
        if not mine >> m.src & 1:
            raise IllegalMoveError(f"{who} cannot relocate from {m.src}: no own token there")
        if not p.free >> m.dst & 1:
            raise IllegalMoveError(f"{who} cannot relocate to {m.dst}: vertex occupied")
        if spec is not None and spec.rule is Rule.SLIDING and not h.neighbors[m.src] >> m.dst & 1:
            raise IllegalMoveError(f"{who} cannot slide {m.src}->{m.dst}: no common edge")
        new_mine = mine ^ (1 << m.src) ^ (1 << m.dst)
    else:
        raise IllegalMoveError(f"unknown move {m!r}")
    if maker_moves:
        pos = Position(h, new_mine, p.breaker)
    else:
        pos = Position(h, p.maker, new_mine)
    return GameState(pos, s.to_move.other)


def terminal_status(p: Position) -> Status:
    M, B = p.maker, p.breaker
    masks = p.hypergraph.masks
    if any(not e & ~M for e in masks):
        return Status.MAKER_WIN
    if all(e & B for e in masks):
        return Status.BREAKER_CERTIFIED
    return Status.ONGOING
