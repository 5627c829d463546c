"""Line-oriented text formats for boards, positions, pairings and guard graphs.

Board files::

    # comment
    vertices 5
    edge 0 1 2
    edge 2 3
    maker 0
    breaker 3
    pair 1 4

Graph files (eternal domination instances)::

    vertices 3
    edge 0 1
    edge 1 2
    guard 1
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .core import Hypergraph, Position, bits_of
from .pairing import Pairing


class FormatError(ValueError):
    """Malformed input; the message names the source and line."""

    def __init__(self, source: str, line: int, msg: str):
        super().__init__(f"{source}:{line}: {msg}")
        self.source = source
        self.line = line


@dataclass(frozen=True)
class BoardFile:
    position: Position
    pairing: Optional[Pairing] = None

    @property
    def hypergraph(self) -> Hypergraph:
        return self.position.hypergraph


def _ints(tokens: list[str], source: str, lineno: int) -> list[int]:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise FormatError(source, lineno, f"expected an integer, got {t!r}") from None
    return out


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_board(text: str, source: str = "<string>") -> BoardFile:
    n: Optional[int] = None
    edges: list[tuple[int, ...]] = []
    maker: list[int] = []
    breaker: list[int] = []
    pairs: list[tuple[int, int]] = []
    for lineno, (kw, *rest) in _lines(text):
        vals = _ints(rest, source, lineno)
        if kw == "vertices":
            if n is not None:
                raise FormatError(source, lineno, "duplicate 'vertices' line")
            if len(vals) != 1 or vals[0] < 0:
                raise FormatError(source, lineno, "'vertices' takes one non-negative integer")
            n = vals[0]
            continue
        if n is None:
            raise FormatError(source, lineno, f"'{kw}' before 'vertices'")
        for v in vals:
            if not 0 <= v < n:
                raise FormatError(source, lineno, f"vertex {v} outside [0, {n})")
        if kw == "edge":
            edges.append(tuple(vals))
        elif kw == "maker":
            maker.extend(vals)
        elif kw == "breaker":
            breaker.extend(vals)
        elif kw == "pair":
            if len(vals) != 2 or vals[0] == vals[1]:
                raise FormatError(source, lineno, "'pair' takes two distinct vertices")
            pairs.append((vals[0], vals[1]))
        else:
            raise FormatError(source, lineno, f"unknown keyword {kw!r}")
    if n is None:
        raise FormatError(source, 0, "missing 'vertices' line")
    h = Hypergraph(n, edges)
    if set(maker) & set(breaker):
        raise FormatError(source, 0, "a vertex is listed for both Maker and Breaker")
    try:
        pi = Pairing(pairs) if pairs else None
    except ValueError as exc:
        raise FormatError(source, 0, str(exc)) from None
    return BoardFile(Position.of(h, maker, breaker), pi)


def format_board(p: Position | Hypergraph, pairing: Optional[Pairing] = None) -> str:
    if isinstance(p, Hypergraph):
        p = Position(p)
    h = p.hypergraph
    lines = [f"vertices {h.n}"]
    lines += ["edge " + " ".join(map(str, e)) for e in h.edges]
    if p.maker:
        lines.append("maker " + " ".join(map(str, bits_of(p.maker))))
    if p.breaker:
        lines.append("breaker " + " ".join(map(str, bits_of(p.breaker))))
    if pairing is not None:
        lines += [f"pair {u} {v}" for u, v in pairing.pairs]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, source: str = "<string>"):
    """Returns ``(Graph, guards)``."""
    from .sliding import Graph

    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    guards: list[int] = []
    for lineno, (kw, *rest) in _lines(text):
        vals = _ints(rest, source, lineno)
        if kw == "vertices":
            if n is not None or len(vals) != 1 or vals[0] < 0:
                raise FormatError(source, lineno, "'vertices' takes one non-negative integer, once")
            n = vals[0]
            continue
        if n is None:
            raise FormatError(source, lineno, f"'{kw}' before 'vertices'")
        for v in vals:
            if not 0 <= v < n:
                raise FormatError(source, lineno, f"vertex {v} outside [0, {n})")
        if kw == "edge":
            if len(vals) != 2 or vals[0] == vals[1]:
                raise FormatError(source, lineno, "graph edges join two distinct vertices")
            edges.append((vals[0], vals[1]))
        elif kw == "guard":
            guards.extend(vals)
        else:
            raise FormatError(source, lineno, f"unknown keyword {kw!r}")
    if n is None:
        raise FormatError(source, 0, "missing 'vertices' line")
    return Graph(n, edges), frozenset(guards)


def format_graph(g, guards=()) -> str:
    lines = [f"vertices {g.n}"]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    if guards:
        lines.append("guard " + " ".join(map(str, sorted(guards))))
    return "\n".join(lines) + "\n"


def read_text(path: str) -> tuple[str, str]:
    """Contents and display name; ``-`` is standard input."""
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    return Path(path).read_text(), path
