"""Instance-level trace of the color-counting argument behind the rainbow-C4-free bound.

For a longest rainbow path P = u_1 ... u_p and a target length k >= 5 (with
s = floor(k/2), t = ceil(k/2)) the argument looks at

* ``head``  = c(u_1, u_k P u_{p-t+1}) and ``tail`` = c(u_p, u_s P u_{p-k+1}),
* the colors u_1 and u_p send outside P that they do not already send into P:
  ``shared_outside`` (new at both ends), ``head_outside`` and
  ``tail_outside`` (new at one end only),
* 0/1 indicators saying whether the end edges u_1u_2, u_{p-1}u_p and the
  closing pair u_1u_p carry colors not yet counted,

and derives six counting inequalities.  :func:`verify_trace_inequalities`
recomputes everything from the graph and checks each one, plus the set
disjointness claims the inequalities rest on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InapplicableError, PreconditionError
from .graph import ColorSet, EdgeColoredGraph, VertexPath, color_degree, colors_between, min_color_degree
from .lemmas import require_longest_path, require_no_cycle_at_least
from .search import C4Certificate, CycleQuery, SearchResult

__all__ = ["ProofTrace", "Check", "TraceVerdict", "compute_proof_trace", "verify_trace_inequalities"]

# primary inequalities, in order; the remaining checks support them
PRIMARY_CHECKS = (
    "path_vertices",
    "outside_vertices",
    "head_path_colors",
    "tail_path_colors",
    "head_degree",
    "tail_degree",
)


@dataclass(frozen=True)
class ProofTrace:
    k: int
    s: int
    t: int
    path: VertexPath
    head: ColorSet
    tail: ColorSet
    shared_outside: ColorSet
    head_outside: ColorSet
    tail_outside: ColorSet
    head_edge_new: int
    tail_edge_new: int
    closing_new_head: int
    closing_new_tail: int
    closing_edge: bool
    head_span: int
    head_slack: int
    head_reps: dict[int, int]
    tail_reps: dict[int, int]
    outside: tuple[int, ...]
    graph_key: tuple = field(default=(), repr=False)

    @property
    def p(self) -> int:
        return self.path.p

    def notes(self) -> list[str]:
        if self.closing_edge:
            return []
        return ["u1 and up are not adjacent: closing indicators set to 0"]


def _reps(g: EdgeColoredGraph, end: int, colors: ColorSet, outside: tuple[int, ...]) -> dict[int, int]:
    reps: dict[int, int] = {}
    for v in outside:
        c = g.color(end, v)
        if c is not None and c in colors and c not in reps:
            reps[c] = v
    return reps


def compute_proof_trace(
    g: EdgeColoredGraph, k: int, path_cert: SearchResult | None, path: VertexPath | None = None
) -> ProofTrace:
    """Fill in every set, indicator and count for (g, P, k).

    ``path`` defaults to the certified witness; any other longest rainbow
    path (e.g. its reverse) may be given.
    """
    if path is None:
        path = path_cert.best_witness if path_cert is not None else None
        if path is None:
            raise PreconditionError("a completed longest_rainbow_path search is required")
    require_longest_path(g, path, path_cert)
    if k < 3:
        raise InapplicableError(f"k must be at least 3, got {k}")
    if path.p < 2 * k:
        raise InapplicableError(f"trace needs p >= 2k, got p={path.p}, k={k}")
    return _build(g, k, path)


def _build(g: EdgeColoredGraph, k: int, path: VertexPath) -> ProofTrace:
    p = path.p
    s, t = k // 2, k - k // 2
    u1, up = path.u(1), path.u(p)
    on_path = set(path.vertices)
    outside = tuple(v for v in range(g.n) if v not in on_path)

    head = colors_between(g, u1, path.segment(k, p - (t - 1)))
    tail = colors_between(g, up, path.segment(s, p - (k - 1)))
    head_in = colors_between(g, u1, path.vertices)
    tail_in = colors_between(g, up, path.vertices)
    head_out = colors_between(g, u1, outside)
    tail_out = colors_between(g, up, outside)
    shared = (head_out - head_in) & (tail_out - tail_in)
    only_head = head_out - (shared | head_in)
    only_tail = tail_out - (shared | tail_in)

    c12 = g.color(u1, path.u(2))
    cpp = g.color(path.u(p - 1), up)
    closing = g.color(u1, up)
    if closing is None:
        new_head = new_tail = 0
    else:
        new_head = int(closing not in head and closing != c12)
        new_tail = int(closing not in tail and closing != cpp)
    span = len(head | ColorSet((c12,)))

    return ProofTrace(
        k=k,
        s=s,
        t=t,
        path=path,
        head=head,
        tail=tail,
        shared_outside=shared,
        head_outside=only_head,
        tail_outside=only_tail,
        head_edge_new=int(c12 not in head),
        tail_edge_new=int(cpp not in tail),
        closing_new_head=new_head,
        closing_new_tail=new_tail,
        closing_edge=closing is not None,
        head_span=span,
        head_slack=(p - t - k + 3) - span,
        head_reps=_reps(g, u1, only_head, outside),
        tail_reps=_reps(g, up, only_tail, outside),
        outside=outside,
        graph_key=g.key(),
    )


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    relation: str
    rhs: int
    holds: bool


@dataclass(frozen=True)
class TraceVerdict:
    checks: tuple[Check, ...]
    min_color_degree: int

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.holds]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


_REL = {">=": int.__ge__, "<=": int.__le__, "==": int.__eq__}


def verify_trace_inequalities(
    trace: ProofTrace,
    g: EdgeColoredGraph,
    cycle_cert: SearchResult | CycleQuery | None,
    c4_cert: C4Certificate | None,
) -> TraceVerdict:
    """Check the counting inequalities of ``trace`` against ``g``.

    Requires certificates that g has no rainbow cycle of length >= k and no
    rainbow C4; all quantities are recomputed from g rather than read from
    the trace.
    """
    if trace.graph_key != g.key():
        raise PreconditionError("trace was computed on a different graph")
    require_no_cycle_at_least(g, trace.k, cycle_cert)
    if c4_cert is None or not c4_cert.certifies_free(g):
        raise PreconditionError("no certificate that the graph is rainbow-C4-free")

    # the path was certified when the trace was built; everything derived from
    # it is rebuilt here
    fresh = _build(g, trace.k, trace.path)
    k, s, t, P = fresh.k, fresh.s, fresh.t, fresh.path
    p = P.p
    u1, up = P.u(1), P.u(p)
    A, B = fresh.head, fresh.tail
    C0, C1, C2 = fresh.shared_outside, fresh.head_outside, fresh.tail_outside
    e1, e2, e1p, e2p = fresh.head_edge_new, fresh.tail_edge_new, fresh.closing_new_head, fresh.closing_new_tail
    delta = min_color_degree(g)
    c12 = g.color(u1, P.u(2))
    cpp = g.color(P.u(p - 1), up)
    closing = g.color(u1, up)
    path_colors = ColorSet(g.color(a, b) for a, b in P.edges())
    head_in = colors_between(g, u1, P.vertices)
    tail_in = colors_between(g, up, P.vertices)
    reps_x, reps_y = set(fresh.head_reps.values()), set(fresh.tail_reps.values())
    reps_ok = all(g.color(u1, v) == c and v in fresh.outside for c, v in fresh.head_reps.items()) and all(
        g.color(up, v) == c and v in fresh.outside for c, v in fresh.tail_reps.items()
    )

    rows = [
        ("path_vertices", p, ">=", len(A) + len(B) + len(C0) + e1 + e2 + e1p * e2p),
        ("outside_vertices", len(fresh.outside), ">=", len(C0) + len(C1) + len(C2) - 1),
        ("head_path_colors", len(head_in - (A | ColorSet((c12,)))), "<=", t + k - 4),
        ("tail_path_colors", len(tail_in - (B | ColorSet((cpp,)))), "<=", s + k - 3),
        ("head_degree", len(A) + len(C0) + len(C1) + e1, ">=", delta - k - t + 3),
        ("tail_degree", len(B) + len(C0) + len(C2) + e2, ">=", delta - k - s + 2),
        ("rep_overlap", len(reps_x & reps_y), "<=", 1),
        ("reps_valid", int(reps_ok), "==", 1),
        ("shared_disjoint", len(C0 & (A | B)), "==", 0),
        ("outside_disjoint", len(C1 & C2), "==", 0),
        ("colors_on_path", len((A | B | C0 | C1 | C2) - path_colors), "==", 0),
        ("head_edge_not_in_tail", int(c12 in B), "==", 0),
        ("tail_edge_not_in_head", int(cpp in A), "==", 0),
        ("closing_on_path", int(closing is not None and closing not in path_colors), "==", 0),
        ("segment_common", len(A & B), "<=", 1),
        ("head_span_bound", fresh.head_span, "<=", p - t - k + 3),
        ("tail_span_bound", len(B | ColorSet((cpp,))), "<=", p - s - k + 2),
        ("head_slack_reconstruction", len(head_in), "<=", (p - 1) - fresh.head_slack),
        ("head_degree_full", len(A) + len(C0) + len(C1) + e1 + e1p + (k + t - 4), ">=", color_degree(g, u1)),
        ("tail_degree_full", len(B) + len(C0) + len(C2) + e2 + e2p + (k + s - 3), ">=", color_degree(g, up)),
        ("recomputed", int(fresh == trace), "==", 1),
    ]
    checks = tuple(Check(name, lhs, rel, rhs, _REL[rel](lhs, rhs)) for name, lhs, rel, rhs in rows)
    return TraceVerdict(checks, delta)

