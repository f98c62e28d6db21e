"""Naive enumeration of all rainbow paths / cycles, for cross-checking solvers.

Deliberately shares nothing with the kernels: plain sets, no bounds, and
every sequence is re-checked with ``graph.is_rainbow`` before it is kept.
Exponential by design, so refused above 10 vertices.
"""

from __future__ import annotations

from .graph import EdgeColoredGraph, VertexCycle, VertexPath, is_rainbow

ORACLE_MAX_N = 10


def _adjacency(g: EdgeColoredGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _simple_rainbow_walks(g: EdgeColoredGraph, start: int, adj) -> list[list[int]]:
    out = []

    def grow(seq: list[int], colors: set):
        out.append(list(seq))
        for w in adj[seq[-1]]:
            if w in seq:
                continue
            c = g.color(seq[-1], w)
            if c in colors:
                continue
            seq.append(w)
            colors.add(c)
            grow(seq, colors)
            colors.discard(c)
            seq.pop()

    grow([start], set())
    return out


def oracle_enumerate(g: EdgeColoredGraph, kind: str) -> list:
    """All rainbow paths (one orientation each, single vertices included) or cycles."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle refuses n={g.n} > {ORACLE_MAX_N}")
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', not {kind!r}")
    adj = _adjacency(g)
    found = set()
    for s in range(g.n):
        for seq in _simple_rainbow_walks(g, s, adj):
            if kind == "path":
                if seq[0] <= seq[-1]:
                    found.add(tuple(seq))
            elif len(seq) >= 3 and g.has_edge(seq[-1], seq[0]):
                closed = seq + [seq[0]]
                if is_rainbow(g, zip(closed, closed[1:])):
                    found.add(VertexCycle(tuple(seq)).canonical().vertices)
    result = []
    for seq in sorted(found):
        if kind == "path":
            assert is_rainbow(g, zip(seq, seq[1:]))
            result.append(VertexPath(seq))
        else:
            result.append(VertexCycle(seq))
    return result


def oracle_max_length(g: EdgeColoredGraph, kind: str) -> int:
    items = oracle_enumerate(g, kind)
    return max((w.length for w in items), default=0)


def oracle_maxima(g: EdgeColoredGraph) -> tuple[int, int]:
    """(longest rainbow path, longest rainbow cycle) by one naive walk enumeration.

    The same unpruned search as :func:`oracle_enumerate` without materializing
    the lists; every new maximum is re-checked with ``is_rainbow``.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle refuses n={g.n} > {ORACLE_MAX_N}")
    adj = _adjacency(g)
    best = [0, 0]

    def grow(seq: list[int], colors: set):
        length = len(seq) - 1
        if length > best[0]:
            assert is_rainbow(g, zip(seq, seq[1:]))
            best[0] = length
        if len(seq) > best[1] and len(seq) >= 3 and g.has_edge(seq[-1], seq[0]):
            if g.color(seq[-1], seq[0]) not in colors:
                closed = seq + [seq[0]]
                assert is_rainbow(g, zip(closed, closed[1:]))
                best[1] = len(seq)
        for w in adj[seq[-1]]:
            if w in seq:
                continue
            c = g.color(seq[-1], w)
            if c in colors:
                continue
            seq.append(w)
            colors.add(c)
            grow(seq, colors)
            colors.discard(c)
            seq.pop()

    for s in range(g.n):
        grow([s], set())
    return best[0], best[1]
