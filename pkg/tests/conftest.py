from __future__ import annotations

import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from tokengame.core import STAR, GameSpec, GameState, Hypergraph, Player, Position, Rule  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def hypergraphs(draw, n_min=1, n_max=5, m_max=4, rank_max=None):
    n = draw(st.integers(n_min, n_max))
    top = n if rank_max is None else min(n, rank_max)
    edge = st.lists(st.integers(0, n - 1), min_size=1, max_size=top, unique=True)
    edges = draw(st.lists(edge, min_size=0, max_size=m_max))
    return Hypergraph(n, edges)


@st.composite
def positions(draw, n_max=5, m_max=4, max_tokens=3):
    h = draw(hypergraphs(n_max=n_max, m_max=m_max))
    owner = draw(st.lists(st.sampled_from([None, Player.MAKER, Player.BREAKER]), min_size=h.n, max_size=h.n))
    M = [v for v, o in enumerate(owner) if o is Player.MAKER][:max_tokens]
    B = [v for v, o in enumerate(owner) if o is Player.BREAKER][:max_tokens]
    return Position.of(h, M, B)


budgets = st.sampled_from([1, 2, 3, STAR])
rules = st.sampled_from(list(Rule))


@st.composite
def states_with_spec(draw, n_max=5):
    p = draw(positions(n_max=n_max))
    a = draw(budgets)
    b = draw(budgets)
    n = p.hypergraph.n
    if a is not STAR and p.maker.bit_count() > a:
        a = p.maker.bit_count()
    if b is not STAR and p.breaker.bit_count() > b:
        b = p.breaker.bit_count()
    a = a or 1
    b = b or 1
    spec = GameSpec(a, b, draw(rules))
    to_move = draw(st.sampled_from(list(Player)))
    assert n >= 1
    return GameState(p, to_move), spec


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
