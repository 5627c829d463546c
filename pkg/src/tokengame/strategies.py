"""Scripted strategies and an arena to play them.

The Maker scripts follow fixed play lines (forcing threats along a path,
halving a nunchaku, the regular play on biggap and bigtheta) and always take
an immediate win when one is on the board. Breaker scripts are pairing based.
Any strategy can be pitted against solver-optimal play through
:class:`OptimalPlayer`.

Where a play line leaves a choice open, the lowest-index vertex is used.
"""

from __future__ import annotations

import enum
import logging
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .constructions import (
    BiggapLayout,
    BigthetaLayout,
    NecklaceLayout,
    NunchakuLayout,
    bigtheta,
    biggap,
    necklace,
    nunchaku,
)
from .core import (
    PASS,
    STAR,
    GameSpec,
    GameState,
    Hypergraph,
    IllegalMoveError,
    Move,
    Place,
    Player,
    Position,
    Relocate,
    Rule,
    Status,
    apply_move,
    iter_bits,
    legal_moves,
    terminal_status,
)
from .pairing import Pairing, PairingResponder, SearchLimitExceeded, StrategyInapplicable, find_complete_pairing
from .reach import DEFAULT_STATE_CAP, OptimalPlay

log = logging.getLogger(__name__)


class FamilyMismatch(ValueError):
    """The board is not the one a scripted strategy was written for."""


class Strategy:
    """Base class: ``start`` is called once per game, then ``move`` every turn."""

    name = "strategy"

    def start(self, s: GameState, spec: GameSpec) -> None:
        self.spec = spec

    def move(self, s: GameState) -> Move:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.name


# -- helpers -----------------------------------------------------------------

def winning_fill(s: GameState, spec: GameSpec) -> Optional[Move]:
    """A Maker move that fills an edge right now, if any (lowest edge first)."""
    p = s.position
    h = p.hypergraph
    room = p.maker.bit_count() < spec.budget(Player.MAKER, h.n)
    for e in h.masks:
        if e & p.breaker:
            continue
        rest = e & ~p.maker
        if rest.bit_count() != 1:
            continue
        v = rest.bit_length() - 1
        if room:
            return Place(v)
        for u in iter_bits(p.maker & ~e):
            if not spec.sliding or h.neighbors[u] >> v & 1:
                return Relocate(u, v)
    return None


def _put(s: GameState, spec: GameSpec, target: int, source: Optional[int], cap: int,
         keep: int = 0) -> Move:
    """Get a Maker token onto ``target``, placing while under ``cap`` tokens.

    At the cap the token comes from ``source`` if Maker holds it, else from the
    lowest-index Maker vertex outside ``keep``.
    """
    p = s.position
    if not p.free >> target & 1:
        raise StrategyInapplicable(f"planned vertex {target} is not free")
    if p.maker.bit_count() < min(cap, spec.budget(Player.MAKER, p.hypergraph.n)):
        return Place(target)
    if source is not None and p.maker >> source & 1:
        return Relocate(source, target)
    for u in iter_bits(p.maker & ~keep):
        return Relocate(u, target)
    raise StrategyInapplicable(f"no Maker token can be moved to {target}")


def _require(s: GameState, expected: Position, family: str) -> None:
    p = s.position
    if p.hypergraph != expected.hypergraph:
        raise FamilyMismatch(f"board is not {family}")
    if p.maker != expected.maker or p.breaker != expected.breaker:
        raise FamilyMismatch(f"start position is not the seeded {family} position")


# -- Maker scripts -----------------------------------------------------------

class ForcingMaker(Strategy):
    """Three-token forcing play along a nunchaku or a necklace.

    Nunchaku: a third token goes on ``a_1``, then each move shifts the token on
    ``a_{i-2}`` to ``a_i`` so that every move threatens the next edge, while the
    token on ``a_L`` never moves. Necklace: the token on ``a_1`` stays and two
    tokens walk round the cycle until two threats meet at ``a_1``.
    """

    name = "forcing"
    max_tokens = 3

    def __init__(self, family: str, L: int):
        if family == "nunchaku":
            lay = NunchakuLayout(L)
            self.expected = nunchaku(L)
            self.anchor = 1 << lay.a(L)
            self.plan = [(lay.a(1), None)] + [(lay.a(i), lay.a(i - 2)) for i in range(2, L)]
        elif family == "necklace":
            lay = NecklaceLayout(L)
            self.expected = necklace(L)
            self.anchor = 1 << lay.a(1)
            self.plan = [(lay.a(2), None), (lay.a(3), None)] + [(lay.a(i), lay.a(i - 2)) for i in range(4, L + 1)]
        else:
            raise FamilyMismatch(f"forcing play is defined on nunchaku or necklace, not {family!r}")
        self.family = family
        self.L = L
        self.step = 0

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        _require(s, self.expected, f"{self.family}({self.L})")
        self.step = 0

    def move(self, s: GameState) -> Move:
        win = winning_fill(s, self.spec)
        if win is not None:
            return win
        if self.step >= len(self.plan):
            raise StrategyInapplicable("forcing line exhausted without a win")
        target, source = self.plan[self.step]
        self.step += 1
        return _put(s, self.spec, target, source, self.max_tokens, keep=self.anchor)


class DichotomyMaker(Strategy):
    """Halving play on a nunchaku: claim the middle ``a`` of the intact piece.

    After each claim Breaker can spoil at most one of the two halves; Maker
    continues in the shortest intact half and fills its ``b`` once the piece
    is a single edge.
    """

    name = "dichotomy"

    def __init__(self, L: int):
        self.L = L
        self.lay = NunchakuLayout(L)
        self.expected = nunchaku(L)

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        _require(s, self.expected, f"nunchaku({self.L})")
        self.pieces: list[tuple[int, int]] = [(0, self.L)]

    def _intact(self, s: GameState, lo: int, hi: int) -> bool:
        lay = self.lay
        inner = [lay.a(i) for i in range(lo + 1, hi)] + [lay.b(i) for i in range(lo + 1, hi + 1)]
        p = s.position
        return (all(p.free >> v & 1 for v in inner)
                and p.maker >> lay.a(lo) & 1 and p.maker >> lay.a(hi) & 1)

    def move(self, s: GameState) -> Move:
        win = winning_fill(s, self.spec)
        if win is not None:
            return win
        ok = [pc for pc in self.pieces if self._intact(s, *pc)]
        if not ok:
            raise StrategyInapplicable("Breaker has entered every piece")
        lo, hi = min(ok, key=lambda pc: (pc[1] - pc[0], pc))
        mid = lo + (hi - lo + 1) // 2
        self.pieces = [(lo, mid), (mid, hi)]
        keep = (1 << self.lay.a(lo)) | (1 << self.lay.a(hi))
        return _put(s, self.spec, self.lay.a(mid), None, self.spec.budget(Player.MAKER, s.position.hypergraph.n),
                    keep=keep)


class RegularPlayMaker(Strategy):
    """The regular play line on biggap(4, n) or bigtheta(N).

    biggap: ``a_1, a_2`` (the guarded pair), then ``a_3, a_4``, then each move
    shifts the trailing token forward two steps along the cycle, and finally
    fills ``e_L`` through ``b_L``; four tokens throughout.

    bigtheta: ``a_0, c_1..c_N``, then ``a_1``, then ``a_{i-2} -> a_i`` up to
    ``a_{2N}``, then ``ā_{2N}`` and two of the ``u_j`` to fill an edge of
    ``E_{a_{2N}}``.
    """

    name = "regular"

    def __init__(self, family: str, param: int, fallback: Optional[Strategy] = None):
        self.family = family
        # takes over if the line breaks; without one, Maker resigns
        self.fallback = fallback
        if family == "biggap":
            n = param
            if n % 2 == 0 or n < 9:
                raise FamilyMismatch("regular play is scripted for biggap(4, n) with odd n >= 9")
            lay = BiggapLayout((n - 3) // 2)
            L = lay.L
            self.expected = Position(biggap(4, n))
            plan = [(lay.a(i), None) for i in (1, 2, 3, 4)]
            plan += [(lay.a(i + 2), lay.a(i - 1)) for i in range(3, L)]
            plan.append((lay.b(L), lay.a(L - 1)))
            self.keep = 1 << lay.a(1)
            self.tail_u: tuple[int, ...] = ()
        elif family == "bigtheta":
            N = param
            lay = BigthetaLayout(N)
            self.expected = Position(bigtheta(N)[0])
            plan = [(lay.a(0), None)] + [(lay.c(i), None) for i in range(1, N + 1)] + [(lay.a(1), None)]
            plan += [(lay.a(i), lay.a(i - 2)) for i in range(2, 2 * N + 1)]
            plan.append((lay.abar2N, None))
            self.keep = 1 << lay.a(2 * N)
            self.tail_u = lay.u
        else:
            raise FamilyMismatch(f"regular play is defined on biggap or bigtheta, not {family!r}")
        self.plan = plan
        self.param = param

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        _require(s, self.expected, f"{self.family}({self.param})")
        self.step = 0
        self.placed_tail = 0
        self.broken = False
        if self.fallback is not None:
            self.fallback.start(s, spec)

    def move(self, s: GameState) -> Move:
        if not self.broken:
            try:
                return self._scripted(s)
            except StrategyInapplicable:
                if self.fallback is None:
                    raise
                self.broken = True
                log.debug("regular play broke off, handing over to %s", self.fallback)
        return self.fallback.move(s)

    def _scripted(self, s: GameState) -> Move:
        win = winning_fill(s, self.spec)
        if win is not None:
            return win
        cap = self.spec.budget(Player.MAKER, s.position.hypergraph.n)
        if self.step < len(self.plan):
            target, source = self.plan[self.step]
            self.step += 1
            # tokens moved late in the line must not come off the anchor
            return _put(s, self.spec, target, source, cap, keep=self.keep if source is None else 0)
        for u in self.tail_u:
            if s.position.free >> u & 1:
                hold = self.keep | self.placed_tail
                mv = _put(s, self.spec, u, None, cap, keep=hold | (1 << self.plan[-1][0]))
                self.placed_tail |= 1 << u
                return mv
        raise StrategyInapplicable("regular play line exhausted without a win")


class RandomMaker(Strategy):
    """Uniformly random legal Maker move (seeded)."""

    name = "random"

    def __init__(self, seed: int = 0):
        self.seed = seed

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        self.rng = random.Random(self.seed)

    def move(self, s: GameState) -> Move:
        return self.rng.choice(legal_moves(s, self.spec))


# -- Breaker scripts ---------------------------------------------------------

class PairingBreaker(Strategy):
    """Pairing strategy for a fixed pairing, armed at the start position."""

    name = "pairing"

    def __init__(self, pi: Pairing):
        self.pi = pi

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        self.responder = PairingResponder(self.pi, s.position)

    def move(self, s: GameState) -> Move:
        return self.responder(s, self.spec)


class TwoPhaseBreaker(Strategy):
    """Breaker for bigtheta(N) with unlimited tokens.

    Phase 1: if some claim leaves a position admitting a complete pairing,
    make the lowest such claim and switch; otherwise answer Maker's new token
    with its twin under the canonical pairing, or claim the lowest free
    vertex when there is no free twin. Phase 2: pairing strategy for the
    complete pairing found. Breaker never vacates a vertex in Phase 1.
    """

    name = "two-phase"

    def __init__(self, N: int):
        self.N = N
        self.h, self.pi = bigtheta(N)

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        if s.position.hypergraph != self.h:
            raise FamilyMismatch(f"board is not bigtheta({self.N})")
        self.phase = 1
        self.switches = 0
        self.phase2: Optional[PairingResponder] = None
        self.last_maker = s.position.maker
        self._cache: dict[tuple[int, int], Optional[Pairing]] = {}

    def _complete_after(self, p: Position, y: int) -> Optional[Pairing]:
        B = p.breaker | (1 << y)
        key = (p.maker, B)
        if key not in self._cache:
            q = Position(p.hypergraph, p.maker, B)
            # a residual edge of size <= 1 can never be covered
            threats = any(not e & B and (e & ~p.maker).bit_count() <= 1 for e in p.hypergraph.masks)
            try:
                self._cache[key] = None if threats else find_complete_pairing(q, self.spec)
            except SearchLimitExceeded:
                self._cache[key] = None
        return self._cache[key]

    def move(self, s: GameState) -> Move:
        p = s.position
        if self.phase == 2:
            return self.phase2(s, self.spec)
        if p.breaker.bit_count() >= self.spec.budget(Player.BREAKER, p.hypergraph.n):
            raise StrategyInapplicable("two-phase Breaker needs a spare token every round")
        for y in iter_bits(p.free):
            pi2 = self._complete_after(p, y)
            if pi2 is not None:
                self.phase = 2
                self.switches += 1
                armed = Position(p.hypergraph, p.maker, p.breaker | (1 << y))
                self.phase2 = PairingResponder(pi2, armed)
                log.debug("two-phase Breaker switches on %d with %s", y, pi2.pairs)
                return Place(y)
        fresh = p.maker & ~self.last_maker
        self.last_maker = p.maker
        x = fresh.bit_length() - 1 if fresh else None
        y = self.pi.twin.get(x) if x is not None else None
        if y is not None and p.free >> y & 1:
            return Place(y)
        if p.free:
            return Place((p.free & -p.free).bit_length() - 1)
        return PASS


class DefenderMirrorBreaker(Strategy):
    """Breaker on a reduction board copying a winning Defender's guard moves."""

    name = "mirror"

    def __init__(self, graph, guards):
        from .sliding import build_sliding_position

        self.graph = graph
        self.guards = frozenset(guards)
        self.expected = build_sliding_position(graph, self.guards)[1]

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        if s.position.hypergraph != self.expected.hypergraph:
            raise FamilyMismatch("board is not the reduction board of this graph")

    def move(self, s: GameState) -> Move:
        from .sliding import ed_defender_move

        n = self.graph.n
        p = s.position
        u = p.maker.bit_length() - 1
        if not 0 <= u < n or p.breaker >> (n + u) & 1:
            return PASS
        guards = frozenset(v - n for v in iter_bits(p.breaker))
        src = ed_defender_move(self.graph, guards, u)
        if src is None:
            raise StrategyInapplicable(f"no winning Defender answer to an attack on {u}")
        return Relocate(n + src, n + u)


class OptimalPlayer(Strategy):
    """Solver-optimal play: fastest win for Maker, longest resistance for Breaker."""

    name = "optimal"

    def __init__(self, cap: int = DEFAULT_STATE_CAP):
        self.cap = cap

    def start(self, s: GameState, spec: GameSpec) -> None:
        super().start(s, spec)
        compress = spec.rule is Rule.JUMPING and spec.b is STAR
        self.play = OptimalPlay(s.position.hypergraph, spec, compress=compress, cap=self.cap)

    def move(self, s: GameState) -> Move:
        return self.play.choose(s)


def scripted_strategy(kind: str, **params) -> Strategy:
    """Factory by name: forcing, dichotomy, regular, two-phase, random, optimal."""
    if kind == "forcing":
        return ForcingMaker(params.get("family", "nunchaku"), params["L"])
    if kind == "dichotomy":
        return DichotomyMaker(params["L"])
    if kind == "regular":
        family = params.get("family", "biggap")
        return RegularPlayMaker(family, params["n"] if family == "biggap" else params["N"])
    if kind == "two-phase":
        return TwoPhaseBreaker(params["N"])
    if kind == "random":
        return RandomMaker(params.get("seed", 0))
    if kind == "optimal":
        return OptimalPlayer()
    raise ValueError(f"unknown strategy kind {kind!r}")


# -- arena -------------------------------------------------------------------

class Verdict(enum.Enum):
    MAKER_WIN = "maker-win"
    BREAKER_SURVIVES = "breaker-survives"


@dataclass(frozen=True)
class Turn:
    round: int
    player: Player
    move: Move
    maker: tuple[int, ...]
    breaker: tuple[int, ...]

    def __str__(self) -> str:
        who = "M" if self.player is Player.MAKER else "B"
        return f"{self.round:4d} {who} {self.move}  M={list(self.maker)} B={list(self.breaker)}"


@dataclass
class ArenaResult:
    verdict: Verdict
    rounds: int
    reason: str
    start: GameState
    final: GameState
    transcript: list[Turn] = field(default_factory=list)
    max_maker_tokens: int = 0

    def replay(self, spec: GameSpec) -> GameState:
        s = self.start
        for t in self.transcript:
            s = apply_move(s, t.move, spec)
        return s


def default_max_rounds(h: Hypergraph, spec: GameSpec) -> int:
    n = h.n
    return 4 * n * (spec.budget(Player.MAKER, n) + spec.budget(Player.BREAKER, n))


def arena(maker: Strategy, breaker: Strategy, h: Hypergraph, spec: GameSpec,
          start: Position | GameState | None = None, max_rounds: Optional[int] = None,
          stop_on_repeat: bool = True) -> ArenaResult:
    """Alternate play from ``start`` (Maker first) until a fill, a repeat or the round cap.

    A repeated state is a Breaker win under the game rules; ``stop_on_repeat=False``
    keeps playing through repeats, to stress a Breaker script for the full cap.
    """
    if start is None:
        s = GameState(Position(h))
    elif isinstance(start, Position):
        s = GameState(start)
    else:
        s = start
    if max_rounds is None:
        max_rounds = default_max_rounds(h, spec)
    s0 = s
    turns: list[Turn] = []
    most = s.position.maker.bit_count()

    def result(verdict: Verdict, rounds: int, reason: str) -> ArenaResult:
        return ArenaResult(verdict, rounds, reason, s0, s, turns, most)

    if terminal_status(s.position) is Status.MAKER_WIN:
        return result(Verdict.MAKER_WIN, 0, "edge filled at start")
    maker.start(s, spec)
    breaker.start(s, spec)
    seen = {s.key}
    for rnd in range(1, max_rounds + 1):
        for side in (maker, breaker):
            try:
                mv = side.move(s)
            except StrategyInapplicable as exc:
                if s.to_move is Player.MAKER:
                    return result(Verdict.BREAKER_SURVIVES, rnd - 1, f"maker resigned: {exc}")
                raise
            try:
                s = apply_move(s, mv, spec)
            except IllegalMoveError as exc:
                raise IllegalMoveError(f"{side} played an illegal move in round {rnd}: {exc}") from None
            p = s.position
            turns.append(Turn(rnd, s.to_move.other, mv, tuple(iter_bits(p.maker)), tuple(iter_bits(p.breaker))))
            most = max(most, p.maker.bit_count())
            if terminal_status(p) is Status.MAKER_WIN:
                return result(Verdict.MAKER_WIN, rnd, "edge filled")
            if stop_on_repeat and s.key in seen:
                return result(Verdict.BREAKER_SURVIVES, rnd, "state repeated")
            seen.add(s.key)
    return result(Verdict.BREAKER_SURVIVES, max_rounds, "round cap reached")


def replay_transcript(start: GameState, moves: Sequence[Move], spec: GameSpec) -> GameState:
    s = start
    for mv in moves:
        s = apply_move(s, mv, spec)
    return s
