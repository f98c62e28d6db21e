"""Checks of the two longest-rainbow-path lemmas on concrete instances.

Both lemmas presuppose that P is a longest rainbow path and that the graph
has no rainbow cycle of length >= k.  Callers prove these with completed
searches; the checks refuse to run on anything less, so a reported violation
always means a falsified statement (or a solver bug), never noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InapplicableError, PreconditionError
from .graph import ColorSet, EdgeColoredGraph, VertexPath, colors_between, is_rainbow
from .search import CycleQuery, SearchResult

__all__ = [
    "LemmaVerdict",
    "check_lemma1",
    "check_lemma2",
    "lemma1_unchecked",
    "lemma2_unchecked",
    "lemma2_sets",
    "lemma2_splits",
    "lemma2_common_mask",
    "require_longest_path",
    "require_no_cycle_at_least",
]


@dataclass(frozen=True)
class LemmaVerdict:
    lemma: str
    holds: bool
    k: int
    details: dict = field(default_factory=dict)
    violation: tuple | None = None


def require_longest_path(g: EdgeColoredGraph, path: VertexPath, cert: SearchResult | None) -> None:
    if cert is None or cert.kind != "path" or not cert.certifies(g):
        raise PreconditionError("a completed longest_rainbow_path search on this graph is required")
    if path.length != cert.best_length:
        raise PreconditionError(f"path has length {path.length}, certified maximum is {cert.best_length}")
    if not path.is_valid_in(g) or not is_rainbow(g, path.edges()):
        raise PreconditionError("path is not a rainbow path of the graph")


def require_no_cycle_at_least(g: EdgeColoredGraph, k: int, cert: SearchResult | CycleQuery | None) -> None:
    if isinstance(cert, SearchResult):
        if cert.kind == "cycle" and cert.certifies(g) and cert.best_length < k:
            return
    elif isinstance(cert, CycleQuery):
        if cert.certifies_absence(g, k):
            return
    raise PreconditionError(f"no certificate that the graph lacks rainbow cycles of length >= {k}")


def _path_color_positions(g: EdgeColoredGraph, path: VertexPath) -> dict[int, int]:
    """color -> j such that the edge u_j u_{j+1} carries it (1-based)."""
    n, cm, vs = g.n, g.color_matrix, path.vertices
    return {cm[vs[j] * n + vs[j + 1]]: j + 1 for j in range(len(vs) - 1)}


def check_lemma1(
    g: EdgeColoredGraph,
    path: VertexPath,
    k: int,
    path_cert: SearchResult | None,
    cycle_cert: SearchResult | CycleQuery | None,
) -> LemmaVerdict:
    """Every color a = c(u_1 u_i), i >= k, already appears on the subpath u_1 P u_i."""
    require_longest_path(g, path, path_cert)
    require_no_cycle_at_least(g, k, cycle_cert)
    if not 3 <= k <= path.p:
        raise InapplicableError(f"need 3 <= k <= p, got k={k}, p={path.p}")
    pos = _path_color_positions(g, path)
    verdict = lemma1_unchecked(g, path, k, pos)
    if not verdict.holds:
        return verdict
    # i -> the path edge u_j u_{j+1} carrying c(u_1 u_i)
    vs, witnesses = path.vertices, {}
    for i in range(k, path.p + 1):
        a = g.color(vs[0], vs[i - 1])
        if a is not None:
            j = pos[a]
            witnesses[i] = (vs[j - 1], vs[j])
    return LemmaVerdict("lemma1", True, k, {**verdict.details, "witnesses": witnesses})


def lemma1_unchecked(g: EdgeColoredGraph, path: VertexPath, k: int, positions: dict | None = None) -> LemmaVerdict:
    """Lemma 1 body; the caller has already validated the certificates."""
    pos = _path_color_positions(g, path) if positions is None else positions
    n, cm, vs = g.n, g.color_matrix, path.vertices
    row = vs[0] * n
    checked = 0
    for i in range(k, len(vs) + 1):
        a = cm[row + vs[i - 1]]
        if a < 0:
            continue
        checked += 1
        j = pos.get(a)
        if j is None or j > i - 1:
            return LemmaVerdict("lemma1", False, k, {"checked": checked}, (i, a))
    return LemmaVerdict("lemma1", True, k, {"checked": checked})


def lemma2_splits(p: int, k: int) -> range:
    """The s values (t = k - s) for which both lemma 2 segments are nonempty."""
    room = p - k + 1
    return range(max(1, k - room), min(k - 1, room) + 1)


def lemma2_common_mask(g: EdgeColoredGraph, path: VertexPath, k: int, s: int, t: int) -> int:
    """Bitmask of the colors shared by the two lemma 2 sets (indices unchecked)."""
    n, cm, vs = g.n, g.color_matrix, path.vertices
    p = len(vs)
    row, head = vs[0] * n, 0
    for w in vs[k - 1 : p - t + 1]:
        c = cm[row + w]
        if c >= 0:
            head |= 1 << c
    row, tail = vs[-1] * n, 0
    for w in vs[s - 1 : p - k + 1]:
        c = cm[row + w]
        if c >= 0:
            tail |= 1 << c
    return head & tail


def lemma2_sets(g: EdgeColoredGraph, path: VertexPath, k: int, s: int, t: int) -> tuple[ColorSet, ColorSet]:
    """The two endpoint color sets compared by lemma 2 (validates indices)."""
    p = path.p
    if s < 1 or t < 1 or s + t != k:
        raise InapplicableError(f"need positive s, t with s + t = k, got s={s}, t={t}, k={k}")
    if k > p - (t - 1):
        raise InapplicableError(f"segment u_{k}..u_{p - (t - 1)} is empty (p={p})")
    if s > p - (k - 1):
        raise InapplicableError(f"segment u_{s}..u_{p - (k - 1)} is empty (p={p})")
    head = colors_between(g, path.u(1), path.segment(k, p - (t - 1)))
    tail = colors_between(g, path.u(p), path.segment(s, p - (k - 1)))
    return head, tail


def check_lemma2(
    g: EdgeColoredGraph,
    path: VertexPath,
    k: int,
    s: int,
    t: int,
    path_cert: SearchResult | None,
    cycle_cert: SearchResult | CycleQuery | None,
) -> LemmaVerdict:
    """The endpoint color sets of the two inner segments share at most one color."""
    require_longest_path(g, path, path_cert)
    require_no_cycle_at_least(g, k, cycle_cert)
    if not 3 <= k <= path.p:
        raise InapplicableError(f"need 3 <= k <= p, got k={k}, p={path.p}")
    return lemma2_unchecked(g, path, k, s, t)


def lemma2_unchecked(g: EdgeColoredGraph, path: VertexPath, k: int, s: int, t: int) -> LemmaVerdict:
    head, tail = lemma2_sets(g, path, k, s, t)
    common = head & tail
    details = {"s": s, "t": t, "head": head, "tail": tail, "common": len(common)}
    if len(common) > 1:
        return LemmaVerdict("lemma2", False, k, details, tuple(common))
    return LemmaVerdict("lemma2", True, k, details)
