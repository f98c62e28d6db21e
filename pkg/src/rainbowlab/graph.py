"""Edge-colored simple graphs and color bookkeeping.

Vertices are ``0..n-1``.  Input color labels are interned to dense ids
``0..num_colors-1`` in order of first appearance along the ``(u, v)``-sorted
edge list, so two graphs with the same color partition intern identically.
"""

from __future__ import annotations

import io
import os
from array import array
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator, TextIO

from .errors import GraphInputError

__all__ = [
    "ColorSet",
    "EdgeColoredGraph",
    "VertexPath",
    "VertexCycle",
    "color_degree",
    "min_color_degree",
    "colors_between",
    "is_rainbow",
    "is_triangle_free",
    "distinct_color_count",
    "read_graph",
    "parse_graph",
    "write_graph",
    "format_graph",
]


class ColorSet:
    """Immutable set of color ids backed by an integer bitmask."""

    __slots__ = ("mask",)

    def __init__(self, colors: Iterable[int] = ()):
        mask = 0
        for c in colors:
            if c < 0:
                raise ValueError(f"negative color id {c}")
            mask |= 1 << c
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> ColorSet:
        cs = cls.__new__(cls)
        cs.mask = mask
        return cs

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, c: object) -> bool:
        return isinstance(c, int) and c >= 0 and bool(self.mask >> c & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __or__(self, other: ColorSet) -> ColorSet:
        return ColorSet.from_mask(self.mask | other.mask)

    def __and__(self, other: ColorSet) -> ColorSet:
        return ColorSet.from_mask(self.mask & other.mask)

    def __sub__(self, other: ColorSet) -> ColorSet:
        return ColorSet.from_mask(self.mask & ~other.mask)

    def __le__(self, other: ColorSet) -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ColorSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def isdisjoint(self, other: ColorSet) -> bool:
        return self.mask & other.mask == 0

    def __repr__(self) -> str:
        return "ColorSet({" + ", ".join(map(str, self)) + "})"


class EdgeColoredGraph:
    """Immutable simple undirected graph with one color per edge.

    ``edges`` maps unordered pairs to arbitrary hashable labels; the labels are
    interned to dense ids (see module docstring).  The original label of id
    ``i`` is ``labels[i]``.
    """

    __slots__ = ("_n", "_edges", "_colors", "_labels", "_cmat", "_nbrs", "_key")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, Hashable]] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        seen: dict[tuple[int, int], Hashable] = {}
        for u, v, label in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphInputError(f"parallel edge {key}")
            seen[key] = label
        pairs = sorted(seen)
        intern: dict[Hashable, int] = {}
        colors = []
        for e in pairs:
            colors.append(intern.setdefault(seen[e], len(intern)))
        self._init(n, tuple(pairs), tuple(colors), tuple(intern))

    @classmethod
    def from_dense(cls, n: int, edges: tuple[tuple[int, int], ...], colors: tuple[int, ...]) -> EdgeColoredGraph:
        """Trusted constructor: ``edges`` sorted, ``colors`` already interned."""
        g = cls.__new__(cls)
        g._init(n, edges, colors, tuple(range(max(colors, default=-1) + 1)))
        return g

    def _init(self, n, edges, colors, labels):
        self._n = n
        self._edges = edges
        self._colors = colors
        self._labels = labels
        cmat = array("i", [-1]) * (n * n)
        for (u, v), c in zip(edges, colors):
            cmat[u * n + v] = c
            cmat[v * n + u] = c
        self._cmat = cmat
        self._nbrs = None
        self._key = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_colors(self) -> tuple[int, ...]:
        return self._colors

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return self._labels

    @property
    def num_colors(self) -> int:
        return len(self._labels)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def color_matrix(self) -> array:
        """Flat ``n*n`` array; entry ``u*n+v`` is the color id of uv or -1."""
        return self._cmat

    def key(self) -> tuple:
        """Hashable identity of the colored graph (used by certificates)."""
        if self._key is None:
            self._key = (self._n, self._edges, self._colors)
        return self._key

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise GraphInputError(f"vertex {v!r} out of range for n={self._n}")

    def color(self, u: int, v: int) -> int | None:
        self._check_vertex(u)
        self._check_vertex(v)
        c = self._cmat[u * self._n + v]
        return None if c < 0 else c

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and self._cmat[u * self._n + v] >= 0

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(w, color)`` pairs for the neighbors of v, ascending in w."""
        self._check_vertex(v)
        if self._nbrs is None:
            n, cm = self._n, self._cmat
            self._nbrs = tuple(
                tuple((w, cm[u * n + w]) for w in range(n) if cm[u * n + w] >= 0) for u in range(n)
            )
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def incident_colors(self, v: int) -> ColorSet:
        mask = 0
        for _, c in self.neighbors(v):
            mask |= 1 << c
        return ColorSet.from_mask(mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self._n}, m={len(self._edges)}, colors={self.num_colors})"


@dataclass(frozen=True)
class VertexPath:
    """Sequence ``u_1 ... u_p`` of distinct vertices; ``length`` counts edges."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in path {self.vertices}")

    @property
    def p(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return list(zip(vs, vs[1:]))

    def u(self, i: int) -> int:
        """The vertex u_i, 1-based."""
        if not 1 <= i <= len(self.vertices):
            raise IndexError(f"u_{i} outside 1..{len(self.vertices)}")
        return self.vertices[i - 1]

    def segment(self, i: int, j: int) -> tuple[int, ...]:
        """Vertices of the subpath u_i P u_j (1-based, inclusive); empty if j < i."""
        if j < i:
            return ()
        if not (1 <= i and j <= len(self.vertices)):
            raise IndexError(f"segment {i}..{j} outside 1..{len(self.vertices)}")
        return self.vertices[i - 1 : j]

    def reversed(self) -> VertexPath:
        return VertexPath(self.vertices[::-1])

    def canonical(self) -> VertexPath:
        vs = self.vertices
        return self if vs[0] <= vs[-1] else self.reversed()

    def is_valid_in(self, g: EdgeColoredGraph) -> bool:
        return all(0 <= v < g.n for v in self.vertices) and all(g.has_edge(a, b) for a, b in self.edges())

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices))


@dataclass(frozen=True)
class VertexCycle:
    """Cyclic sequence of at least three distinct vertices; length = vertex count."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in cycle {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))

    def canonical(self) -> VertexCycle:
        """Rotate to start at the smallest vertex; orient so the 2nd < last."""
        vs = self.vertices
        i = vs.index(min(vs))
        r = vs[i:] + vs[:i]
        if r[1] > r[-1]:
            r = r[:1] + r[1:][::-1]
        return VertexCycle(r)

    def is_valid_in(self, g: EdgeColoredGraph) -> bool:
        return all(0 <= v < g.n for v in self.vertices) and all(g.has_edge(a, b) for a, b in self.edges())

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices))


def color_degree(g: EdgeColoredGraph, v: int) -> int:
    """Number of distinct colors on edges at v."""
    return len(g.incident_colors(v))


def min_color_degree(g: EdgeColoredGraph) -> int:
    if g.n < 1:
        raise GraphInputError("minimum color degree of the empty graph is undefined")
    n, cm = g.n, g.color_matrix
    best = n
    for u in range(n):
        mask = 0
        for c in cm[u * n : u * n + n]:
            if c >= 0:
                mask |= 1 << c
        d = mask.bit_count()
        if d < best:
            best = d
    return best


def colors_between(g: EdgeColoredGraph, u: int, h: Iterable[int]) -> ColorSet:
    """Colors of the edges joining u to a vertex of h."""
    g._check_vertex(u)
    n, cm, base = g.n, g.color_matrix, u * g.n
    mask = 0
    for w in h:
        if 0 <= w < n:
            c = cm[base + w]
            if c >= 0:
                mask |= 1 << c
    return ColorSet.from_mask(mask)


def is_rainbow(g: EdgeColoredGraph, edges: Iterable[tuple[int, int]]) -> bool:
    seen = set()
    for u, v in edges:
        c = g.color(u, v)
        if c is None:
            raise GraphInputError(f"({u}, {v}) is not an edge")
        if c in seen:
            return False
        seen.add(c)
    return True


def is_triangle_free(g: EdgeColoredGraph) -> bool:
    n, cm = g.n, g.color_matrix
    for u, v in g.edges:
        for w, _ in g.neighbors(u):
            if w != v and cm[v * n + w] >= 0:
                return False
    return True


def distinct_color_count(g: EdgeColoredGraph) -> int:
    return g.num_colors


# --- text format ---------------------------------------------------------


def parse_graph(text: str | TextIO) -> EdgeColoredGraph:
    """Parse the ``n m`` / ``u v label`` line format."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    header = None
    edges = []
    lineno = 0
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphInputError("expected header 'n m'", lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise GraphInputError(f"non-integer header {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise GraphInputError("negative header value", lineno)
            continue
        if len(parts) != 3:
            raise GraphInputError(f"expected 'u v label', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"non-integer vertex in {line!r}", lineno) from None
        if len(edges) == header[1]:
            raise GraphInputError(f"more than the declared {header[1]} edges", lineno)
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphInputError(f"self-loop at {u}", lineno)
        edges.append((u, v, parts[2], lineno))
    if header is None:
        raise GraphInputError("missing header 'n m'", lineno or None)
    if len(edges) != header[1]:
        raise GraphInputError(f"declared {header[1]} edges, found {len(edges)}", lineno)
    seen = {}
    for u, v, _, ln in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"duplicate edge {key}", ln)
        seen[key] = ln
    return EdgeColoredGraph(header[0], ((u, v, lab) for u, v, lab, _ in edges))


def read_graph(path: str | os.PathLike) -> EdgeColoredGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def format_graph(g: EdgeColoredGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"{g.n} {g.num_edges}")
    lines.extend(f"{u} {v} {c}" for (u, v), c in zip(g.edges, g.edge_colors))
    return "\n".join(lines) + "\n"


def write_graph(g: EdgeColoredGraph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comment))


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))
