"""Eternal domination and its encoding as a token-sliding game.

Run with ``python3 demos/04_eternal_domination.py``.
"""

from __future__ import annotations

import itertools

from tokengame.reach import solve_position
from tokengame.sliding import (
    Graph,
    all_graphs,
    build_sliding_position,
    check_reduction_equivalence,
    ed_attacker_wins,
    ed_defender_move,
    fig8_instance,
)


def main() -> None:
    g, D = fig8_instance()
    print(f"graph with edges {g.edges}, guards on {sorted(D)}")
    print(f"Attacker wins the domination game: {ed_attacker_wins(g, D)}")
    for v in sorted(set(range(g.n)) - D):
        u = ed_defender_move(g, D, v)
        print(f"  attack {v} -> " + ("no safe answer" if u is None else f"guard moves from {u}"))
    safe = frozenset({0, 2, 3})
    print(f"with guards on {sorted(safe)} Attacker wins: {ed_attacker_wins(g, safe)}")
    for v in sorted(set(range(g.n)) - safe):
        print(f"  attack {v} -> guard moves from {ed_defender_move(g, safe, v)}")

    h, p, spec = build_sliding_position(g, D)
    sol = solve_position(h, spec, p)
    print(f"\nencoded board: {h.n} vertices, {h.m} edges, {spec}")
    print(f"Maker tokens on {sorted(p.maker_set)}, Breaker tokens on {sorted(p.breaker_set)}")
    print(f"token game winner: {sol.winner.name.lower()}\n")

    p3 = Graph(3, [(0, 1), (1, 2)])
    print("one guard in the middle of a path loses: attack an end, then the other end")
    print(f"  Attacker wins: {ed_attacker_wins(p3, [1])}")
    print(f"  with two guards: {ed_attacker_wins(p3, [0, 1])}\n")

    total = agree = 0
    for n in range(1, 5):
        for gg in all_graphs(n):
            for r in range(1, n + 1):
                for guards in itertools.combinations(range(n), r):
                    total += 1
                    agree += check_reduction_equivalence(gg, guards).holds
    print(f"both games agree on {agree} of {total} instances with at most 4 vertices")


if __name__ == "__main__":
    main()
