"""Solve a few small token games and compute their thresholds.

Run with ``python3 demos/01_solving_boards.py``.
"""

from __future__ import annotations

from tokengame import STAR, GameSpec, Hypergraph, Rule, solve_position, tau, theta
from tokengame.constructions import biggap


def show(title: str, h: Hypergraph, spec: GameSpec) -> None:
    sol = solve_position(h, spec)
    print(f"{title:<34} {str(spec):<26} winner={sol.winner.name.lower():<8} "
          f"distance={sol.distance}  first={sol.first_move}  states={sol.states}")


def main() -> None:
    path = Hypergraph(3, [(0, 1), (1, 2)])
    print("A path of two edges: Maker claims the middle and threatens twice.")
    for spec in (GameSpec(1, 1), GameSpec(2, 1), GameSpec(2, 2), GameSpec(2, 1, Rule.SLIDING)):
        show("path 0-1-2", path, spec)
    print(f"theta={theta(path)} tau={tau(path)}\n")

    triangle = Hypergraph(3, [(0, 1, 2)])
    print("One 3-edge: Breaker touches it once and it is dead forever.")
    show("single 3-edge", triangle, GameSpec(3, 1))
    print(f"theta={theta(triangle)} tau={tau(triangle)}\n")

    h = biggap(4, 9)
    print("biggap(4,9): four Maker tokens suffice, yet the win takes five moves.")
    show("biggap(4,9)", h, GameSpec(4, STAR))
    show("biggap(4,9)", h, GameSpec(3, STAR))
    print(f"theta={theta(h)} tau={tau(h)}")


if __name__ == "__main__":
    main()
