"""Exact rainbow path / cycle solvers.

All searches are depth-first branch-and-bound over partial rainbow paths
with vertex and color usage masks.  Vertices are expanded in increasing
order and an incumbent is replaced only by a strictly longer witness, so the
reported witness is the lexicographically first optimal one in canonical
form.  Budgets are cooperative; a search that runs out reports
``complete=False`` with the best witness seen so far.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernels
from .graph import EdgeColoredGraph, VertexCycle, VertexPath

__all__ = [
    "SearchBudget",
    "SearchResult",
    "Answer",
    "CycleQuery",
    "UNLIMITED",
    "longest_rainbow_path",
    "longest_rainbow_cycle",
    "has_rainbow_cycle_at_least",
    "has_rainbow_c4",
    "C4Certificate",
    "certify_c4",
]


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_time: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 0:
            raise ValueError("max_nodes must be non-negative")
        if self.max_time is not None and self.max_time <= 0:
            raise ValueError("max_time must be positive")

    def kernel_args(self) -> tuple[int, float]:
        return (-1 if self.max_nodes is None else self.max_nodes, self.max_time or 0.0)

    @property
    def unlimited(self) -> bool:
        return self.max_nodes is None and self.max_time is None


UNLIMITED = SearchBudget()


@dataclass(frozen=True)
class SearchResult:
    kind: str  # "path" or "cycle"
    best_witness: VertexPath | VertexCycle | None
    best_length: int
    nodes_expanded: int
    complete: bool
    graph_key: tuple = ()

    def certifies(self, g: EdgeColoredGraph) -> bool:
        """True when this is an exhausted search on exactly ``g``."""
        return self.complete and self.graph_key == g.key()


class Answer(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CycleQuery:
    k: int
    answer: Answer
    witness: VertexCycle | None
    nodes_expanded: int
    graph_key: tuple = ()

    def certifies_absence(self, g: EdgeColoredGraph, k: int) -> bool:
        return self.answer is Answer.NO and self.k <= k and self.graph_key == g.key()


def longest_rainbow_path(
    g: EdgeColoredGraph, budget: SearchBudget = UNLIMITED, backend: str | None = None
) -> SearchResult:
    if g.n < 1:
        raise ValueError("longest_rainbow_path needs at least one vertex")
    length, seq, nodes, complete = kernels.for_graph(g.n, backend).longest_path(
        g.n, g.num_colors, g.color_matrix, *budget.kernel_args()
    )
    if length < 0:
        return SearchResult("path", None, 0, nodes, complete, g.key())
    return SearchResult("path", VertexPath(tuple(seq)), length, nodes, complete, g.key())


def longest_rainbow_cycle(
    g: EdgeColoredGraph, budget: SearchBudget = UNLIMITED, backend: str | None = None
) -> SearchResult:
    length, seq, nodes, complete = kernels.for_graph(g.n, backend).rainbow_cycle(
        g.n, g.num_colors, g.color_matrix, 0, *budget.kernel_args()
    )
    witness = VertexCycle(tuple(seq)) if length else None
    return SearchResult("cycle", witness, length, nodes, complete, g.key())


def has_rainbow_cycle_at_least(
    g: EdgeColoredGraph, k: int, budget: SearchBudget = UNLIMITED, backend: str | None = None
) -> CycleQuery:
    """Early-exit search for a rainbow cycle of length >= k (k >= 3)."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    length, seq, nodes, complete = kernels.for_graph(g.n, backend).rainbow_cycle(
        g.n, g.num_colors, g.color_matrix, k, *budget.kernel_args()
    )
    if length >= k:
        return CycleQuery(k, Answer.YES, VertexCycle(tuple(seq)), nodes, g.key())
    return CycleQuery(k, Answer.NO if complete else Answer.UNKNOWN, None, nodes, g.key())


def has_rainbow_c4(g: EdgeColoredGraph, backend: str | None = None) -> VertexCycle | None:
    """A rainbow cycle on exactly four vertices, or None."""
    found = kernels.for_graph(g.n, backend).find_rainbow_c4(g.n, g.color_matrix)
    return None if found is None else VertexCycle(tuple(found))


@dataclass(frozen=True)
class C4Certificate:
    """Outcome of the exact rainbow-C4 check on one graph."""

    found: VertexCycle | None
    graph_key: tuple = ()

    def certifies_free(self, g: EdgeColoredGraph) -> bool:
        return self.found is None and self.graph_key == g.key()


def certify_c4(g: EdgeColoredGraph, backend: str | None = None) -> C4Certificate:
    return C4Certificate(has_rainbow_c4(g, backend), g.key())
