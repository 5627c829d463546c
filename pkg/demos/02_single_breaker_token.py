"""Games where Breaker owns one token are settled by contracting edge pairs.

Run with ``python3 demos/02_single_breaker_token.py``.
"""

from __future__ import annotations

from tokengame import GameSpec, Hypergraph
from tokengame.constructions import k_vs_1
from tokengame.oracle import minimax_oracle
from tokengame.reduction import is_a_reducible, solve_a1


def main() -> None:
    h = k_vs_1(7)
    print(f"k_vs_1(7): {h.m} edges of size 7 on {h.n} vertices")
    for e in h.edges:
        print("  ", e)
    res = solve_a1(h, 7)
    print("contractions for a = 7:")
    for c in res.trace:
        print("  ", c)
    print(f"winner of the (7,1)-game: {res.winner.name.lower()}\n")

    print("Budget matters: three 7-edges are not enough.")
    fewer = Hypergraph(h.n, h.edges[:3])
    print(f"  first three edges -> {solve_a1(fewer, 7).winner.name.lower()}\n")

    tri = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
    print("A triangle with one Maker token: every pair passes the inequality")
    print(f"  is_a_reducible((0,1), (1,2), a=1) = {is_a_reducible((0, 1), (1, 2), 1)}")
    print("but one token never fills a 2-edge, so such edges are dropped first.")
    print(f"  solver: {solve_a1(tri, 1).winner.name.lower()}, "
          f"brute force: {minimax_oracle(tri, GameSpec(1, 1)).name.lower()}")


if __name__ == "__main__":
    main()
