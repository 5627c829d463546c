"""Instance enumeration shared by the test modules."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from tokengame.core import Hypergraph

# One "criterion N: PASS|FAIL ..." line per acceptance criterion run in this session.
ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def _universe(n: int, uniform: int | None) -> tuple[list[int], np.ndarray]:
    """Candidate edge masks, and ``perm_idx[p, j]``: the index of edge ``j`` after permutation ``p``."""
    universe = [e for e in range(1, 1 << n) if uniform is None or e.bit_count() == uniform]
    pos = {e: j for j, e in enumerate(universe)}
    perms = list(itertools.permutations(range(n)))
    perm_idx = np.zeros((len(perms), len(universe)), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, e in enumerate(universe):
            perm_idx[i, j] = pos[sum(1 << p[v] for v in range(n) if e >> v & 1)]
    return universe, perm_idx


def iso_classes(n: int, m: int, uniform: int | None = None) -> list[Hypergraph]:
    """One representative per isomorphism class of hypergraphs on ``n`` labelled
    vertices with exactly ``m`` distinct nonempty edges (isolated vertices kept).
    ``uniform=k`` restricts edges to size ``k``.

    An edge set is coded as a bitset over the candidate edges; the class
    invariant is the least code over all vertex permutations.
    """
    if m == 0:
        return [Hypergraph(n, [])]
    universe, perm_idx = _universe(n, uniform)
    if len(universe) > 62:
        raise ValueError("edge universe too large for 64-bit set codes")
    combos = np.array(list(itertools.combinations(range(len(universe)), m)), dtype=np.int64)
    if combos.size == 0:
        return []
    codes = (np.int64(1) << perm_idx[:, combos]).sum(axis=2).min(axis=0)
    _, first = np.unique(codes, return_index=True)
    out = []
    for i in sorted(first):
        edges = [tuple(v for v in range(n) if universe[j] >> v & 1) for j in combos[i]]
        out.append(Hypergraph(n, edges))
    return out


def all_small_hypergraphs(n_max: int, m_max: int) -> list[Hypergraph]:
    return [h for n in range(1, n_max + 1) for m in range(m_max + 1) for h in iso_classes(n, m)]


def graphs_up_to_iso(n: int) -> list[Hypergraph]:
    """Every simple graph on ``n`` vertices up to isomorphism, as a 2-uniform hypergraph."""
    return [h for m in range(n * (n - 1) // 2 + 1) for h in iso_classes(n, m, uniform=2)]
