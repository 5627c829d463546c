from __future__ import annotations

import itertools
import math
import random

import pytest

from tokengame.constructions import (
    BiggapLayout,
    BigthetaLayout,
    biggap,
    bigtheta,
    diamond_nunchaku,
    k_vs_1,
    lift_plus_one,
    necklace,
    nunchaku,
    random_hypergraph,
    random_uniform,
    two_uniform_outcome,
)
from tokengame.core import STAR, GameSpec, Hypergraph, Player, Position
from tokengame.oracle import minimax_oracle
from tokengame.reach import solve_position
from tokengame.textio import format_board
from tokengame.thresholds import tau, theta


# -- nunchaku / necklace -----------------------------------------------------

def test_nunchaku_shape():
    p = nunchaku(1)
    assert p.hypergraph.n == 3 and p.hypergraph.m == 1
    assert p.maker.bit_count() == 2
    p = nunchaku(5)
    assert p.hypergraph.n == 11 and p.hypergraph.m == 5 and p.hypergraph.is_uniform(3)


def test_nunchaku_three_tokens_win():
    p = nunchaku(3)
    assert solve_position(p.hypergraph, GameSpec(3, STAR), p).winner is Player.MAKER


def test_necklace_shape():
    assert necklace(2).hypergraph.n == 4 and necklace(2).hypergraph.m == 2
    p = necklace(6)
    assert p.hypergraph.n == 12 and p.maker_set == {0}


def test_necklace_three_tokens_win_two_do_not():
    p = necklace(4)
    assert solve_position(p.hypergraph, GameSpec(3, STAR), p).winner is Player.MAKER
    assert solve_position(p.hypergraph, GameSpec(2, STAR), p).winner is Player.BREAKER


@pytest.mark.parametrize("fn,bad", [(nunchaku, 0), (necklace, 1)])
def test_invalid_lengths(fn, bad):
    with pytest.raises(ValueError):
        fn(bad)


# -- diamond nunchaku --------------------------------------------------------

def test_diamond_nunchaku_smallest_instance():
    h = diamond_nunchaku(9)
    assert h.n == 9 and h.is_uniform(3)
    assert theta(h) == 3
    assert tau(h) <= math.ceil(math.log2(9)) + 3


def test_diamond_nunchaku_padding_keeps_thresholds():
    odd, even = diamond_nunchaku(9), diamond_nunchaku(10)
    assert even.n == 10 and even.edges == odd.edges
    assert (theta(odd), tau(odd)) == (theta(even), tau(even))


def test_diamond_nunchaku_rejects_small_n():
    with pytest.raises(ValueError):
        diamond_nunchaku(8)


# -- k_vs_1 ------------------------------------------------------------------

def test_k_vs_1_counts():
    h = k_vs_1(7)
    assert h.m == 4 and h.is_uniform(7)
    assert set(range(7)) == set(h.edges[0])


def test_k_vs_1_for_two():
    h = k_vs_1(2)
    assert h.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_k_vs_1_solver_agrees(k):
    h = k_vs_1(k)
    assert solve_position(h, GameSpec(k, 1)).winner is Player.MAKER


# -- lift ----------------------------------------------------------------------

def test_lift_of_triangle():
    h = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
    lifted = lift_plus_one(h)
    assert lifted.n == 5 and lifted.m == 6 and lifted.is_uniform(3)
    assert sum(1 for e in lifted.edges if 4 in e) == 3


def test_lift_rejects_non_uniform():
    with pytest.raises(ValueError):
        lift_plus_one(Hypergraph(3, [(0, 1), (0, 1, 2)]))


def test_lift_shifts_outcome_on_path():
    h = Hypergraph(3, [(0, 1), (1, 2)])
    for a, b in [(1, 1), (2, 1), (2, 2), (1, 2)]:
        assert solve_position(h, GameSpec(a, b)).winner is \
            solve_position(lift_plus_one(h), GameSpec(a + 1, b + 1)).winner


# -- biggap --------------------------------------------------------------------

def test_biggap_4_9_layout():
    lay = BiggapLayout(3)
    h = biggap(4, 9)
    assert h.n == 9 and h.m == 3 + 20 and h.is_uniform(4)
    assert lay.u == (2, 3, 4, 5, 6)
    assert lay.e(3) == (2, 3, 0, 6)


def test_biggap_5_11_is_one_lift():
    h = biggap(5, 11)
    assert h.n == 11 and h.is_uniform(5)
    assert h == lift_plus_one(biggap(4, 9))


def test_biggap_even_n_pads():
    assert biggap(4, 10) == biggap(4, 9).with_isolated(1)


@pytest.mark.parametrize("k,n", [(3, 9), (4, 8), (5, 10)])
def test_biggap_rejects_bad_parameters(k, n):
    with pytest.raises(ValueError):
        biggap(k, n)


# -- bigtheta ------------------------------------------------------------------

@pytest.mark.parametrize("N", [2, 3, 5])
def test_bigtheta_counts(N):
    h, pi = bigtheta(N)
    assert h.n == 6 * N + 8 and h.m == 2 * N + 10 * (N + 2) and h.is_uniform(4)
    assert len(pi) == N + 2 + 2 * N - 1


def test_bigtheta_guard_families_contain_guard_pairs():
    lay = BigthetaLayout(2)
    h, _ = bigtheta(2)
    for v, vbar in lay.guarded:
        fam = [e for e in h.edges if v in e and vbar in e]
        assert len(fam) == 10
        assert all(set(e) - {v, vbar} <= set(lay.u) for e in fam)


def test_bigtheta_rejects_small_N():
    with pytest.raises(ValueError):
        bigtheta(1)


# -- 2-uniform law -------------------------------------------------------------

def test_two_uniform_examples():
    path = Hypergraph(3, [(0, 1), (1, 2)])
    for b in (1, 2, 3, STAR):
        assert two_uniform_outcome(path, 2, b) is Player.MAKER
    disjoint = Hypergraph(6, [(0, 1), (2, 3), (4, 5)])
    assert two_uniform_outcome(disjoint, 2, 2) is Player.BREAKER
    assert two_uniform_outcome(disjoint, 4, 2) is Player.MAKER
    assert minimax_oracle(disjoint, GameSpec(4, 2)) is Player.MAKER


def test_two_uniform_rejects_bad_input():
    with pytest.raises(ValueError):
        two_uniform_outcome(Hypergraph(3, [(0, 1, 2)]), 2, 1)
    with pytest.raises(ValueError):
        two_uniform_outcome(Hypergraph(2, [(0, 1)]), 1, 1)


# -- determinism ---------------------------------------------------------------

@pytest.mark.parametrize("make", [
    lambda: nunchaku(4), lambda: necklace(5), lambda: Position(diamond_nunchaku(11)),
    lambda: Position(k_vs_1(6)), lambda: Position(biggap(4, 11)), lambda: Position(bigtheta(3)[0]),
])
def test_generators_are_deterministic(make):
    assert format_board(make()) == format_board(make())


def test_random_generators_are_seeded():
    a = random_hypergraph(random.Random(5), 7, 4)
    b = random_hypergraph(random.Random(5), 7, 4)
    assert a == b and a.m <= 4
    u = random_uniform(random.Random(1), 5, 3, 100)
    assert u.m == math.comb(5, 3) and u.is_uniform(3)
    assert len(set(u.edges)) == u.m


def test_random_uniform_edges_are_k_subsets():
    rng = random.Random(2)
    for n, k in itertools.product(range(3, 7), range(1, 4)):
        h = random_uniform(rng, n, k, 3)
        assert h.is_uniform(k) and all(max(e) < n for e in h.edges)
