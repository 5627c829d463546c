"""Scripted strategies against a solver-optimal opponent.

Run with ``python3 demos/03_scripted_strategies.py``.
"""

from __future__ import annotations

from tokengame import STAR, GameSpec
from tokengame.constructions import bigtheta, nunchaku
from tokengame.strategies import (
    DichotomyMaker,
    ForcingMaker,
    OptimalPlayer,
    RandomMaker,
    RegularPlayMaker,
    TwoPhaseBreaker,
    arena,
)


def play(title, maker, breaker, h, spec, start=None, max_rounds=None, show=True):
    res = arena(maker, breaker, h, spec, start, max_rounds, stop_on_repeat=max_rounds is None)
    print(f"== {title}")
    if show:
        for t in res.transcript:
            print("  ", t)
    print(f"   {res.verdict.value} after {res.rounds} rounds ({res.reason}), "
          f"Maker held at most {res.max_maker_tokens} tokens\n")


def main() -> None:
    p = nunchaku(4)
    play("forcing Maker, 3 tokens, on nunchaku(4)", ForcingMaker("nunchaku", 4), OptimalPlayer(),
         p.hypergraph, GameSpec(3, STAR), p)
    play("dichotomy Maker, unlimited tokens, on nunchaku(4)", DichotomyMaker(4), OptimalPlayer(),
         p.hypergraph, GameSpec(STAR, STAR), p)

    h, _ = bigtheta(2)
    play("regular play with 4 tokens on bigtheta(2)", RegularPlayMaker("bigtheta", 2), TwoPhaseBreaker(2),
         h, GameSpec(4, STAR))
    play("regular play with 3 tokens on bigtheta(2)", RegularPlayMaker("bigtheta", 2), TwoPhaseBreaker(2),
         h, GameSpec(3, STAR), max_rounds=200, show=False)
    play("same, handing over to random moves when the line breaks",
         RegularPlayMaker("bigtheta", 2, fallback=RandomMaker(1)), TwoPhaseBreaker(2),
         h, GameSpec(3, STAR), max_rounds=200, show=False)
    play("random Maker with 3 tokens on bigtheta(2)", RandomMaker(1), TwoPhaseBreaker(2),
         h, GameSpec(3, STAR), max_rounds=200, show=False)


if __name__ == "__main__":
    main()
