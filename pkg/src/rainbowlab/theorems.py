"""Hypothesis/conclusion evaluators for the known rainbow path and cycle bounds.

Every threshold is compared in exact rational arithmetic.  A conclusion is
checked as stated (existence of a rainbow cycle or path at least as long as
the guaranteed bound) by an exact search under the caller's budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError
from .graph import (
    EdgeColoredGraph,
    VertexCycle,
    VertexPath,
    distinct_color_count,
    format_graph,
    is_rainbow,
    is_triangle_free,
    min_color_degree,
)
from .search import (
    UNLIMITED,
    Answer,
    SearchBudget,
    has_rainbow_c4,
    has_rainbow_cycle_at_least,
    longest_rainbow_path,
)

__all__ = [
    "THEOREM_IDS",
    "TheoremReport",
    "HuntResult",
    "GuaranteeComparison",
    "evaluate_theorem",
    "hunt_conjecture",
    "compare_guarantees",
]

THEOREM_IDS = ("LiWang", "Cada2", "Das", "ChenLi", "Main", "Main2", "Cor9", "Broersma", "Conjecture")
_NEEDS_K = {"Main": 5, "Main2": 5, "Cor9": 3, "Conjecture": 4}

WITNESS = "witness"
REFUTED = "refuted"
UNKNOWN = "unknown"
NOT_RUN = "not-run"


@dataclass
class TheoremReport:
    theorem: str
    n: int
    k: int | None
    delta_c: int
    hypotheses: dict[str, bool | None]
    conclusion_kind: str  # "cycle" | "path"
    conclusion_bound: Fraction
    required_length: int
    conclusion_verified: str = NOT_RUN
    witness: VertexPath | VertexCycle | None = None
    nodes_expanded: int = 0
    notes: list[str] = field(default_factory=list)
    graph_text: str | None = None

    @property
    def hypotheses_hold(self) -> bool | None:
        vals = list(self.hypotheses.values())
        if all(v is True for v in vals):
            return True
        if any(v is False for v in vals):
            return False
        return None

    @property
    def falsified(self) -> bool:
        """A published statement refuted on an instance meeting its hypotheses."""
        return self.theorem != "Conjecture" and self.hypotheses_hold is True and self.conclusion_verified == REFUTED

    @property
    def counterexample(self) -> bool:
        return self.hypotheses_hold is True and self.conclusion_verified == REFUTED


def _ceil(q: Fraction) -> int:
    return math.ceil(q)


def _rainbow_path_at_least(g, edges_needed: Fraction, budget) -> tuple[bool | None, object]:
    res = longest_rainbow_path(g, budget)
    if res.best_length >= edges_needed:
        return True, res
    return (False if res.complete else None), res


def _statement(g: EdgeColoredGraph, theorem: str, k: int | None, budget: SearchBudget):
    """(hypotheses, kind, bound, notes) for a theorem id, evaluated on g."""
    n = g.n
    delta = min_color_degree(g)
    hyp: dict[str, bool | None] = {}
    notes: list[str] = []
    if theorem == "LiWang":
        hyp["triangle_free"] = is_triangle_free(g)
        hyp["n_at_least_8"] = n >= 8
        hyp["delta_c_at_least_3n/4+1"] = delta >= Fraction(3 * n, 4) + 1
        return hyp, "cycle", delta - Fraction(3 * n, 4) + 2, notes
    if theorem == "Cada2":
        hyp["delta_c_above_n/2+2"] = delta > Fraction(n, 2) + 2
        return hyp, "cycle", Fraction(4), notes
    if theorem == "Das":
        hyp["delta_c_at_least_8"] = delta >= 8
        notes.append("t taken as the minimum color degree; path length counted in edges")
        return hyp, "path", Fraction(_ceil(Fraction(3 * delta, 5))), notes
    if theorem == "ChenLi":
        hyp["delta_c_at_least_7"] = delta >= 7
        notes.append("t taken as the minimum color degree; path length counted in edges")
        return hyp, "path", Fraction(_ceil(Fraction(2 * delta, 3)) + 1), notes
    if theorem == "Main":
        hyp["rainbow_c4_free"] = has_rainbow_c4(g) is None
        hyp["delta_c_at_least_(n+3k-2)/2"] = delta >= Fraction(n + 3 * k - 2, 2)
        return hyp, "cycle", Fraction(k), notes
    if theorem in ("Main2", "Cor9"):
        main2 = {}
        main2["triangle_free"] = is_triangle_free(g)
        main2["rainbow_c4_free"] = has_rainbow_c4(g) is None
        main2["rainbow_path_at_least_3k/2_edges"], _ = _rainbow_path_at_least(g, Fraction(3 * k, 2), budget)
        main2["delta_c_at_least_(2n+3k-1)/4"] = delta >= Fraction(2 * n + 3 * k - 1, 4)
        if theorem == "Main2":
            notes.append("rainbow path length precondition counted in edges")
            return main2, "cycle", Fraction(k), notes
        hyp["n_at_least_3k+1"] = n >= 3 * k + 1
        hyp["delta_c_at_least_(2n+3k-1)/4"] = main2["delta_c_at_least_(2n+3k-1)/4"]
        m2 = list(main2.values())
        m2_hold = True if all(v is True for v in m2) else (False if any(v is False for v in m2) else None)
        notes.append(f"Main2 hypotheses also hold: {m2_hold}")
        return hyp, "cycle", Fraction(k), notes
    if theorem == "Broersma":
        colors = distinct_color_count(g)
        hyp["n_at_least_2"] = n >= 2
        hyp["colors_at_least_n"] = colors >= n
        bound = Fraction(2 * colors, n - 1) if n >= 2 else Fraction(0)
        return hyp, "cycle", bound, notes
    if theorem == "Conjecture":
        hyp["delta_c_at_least_(n+k)/2"] = delta >= Fraction(n + k, 2)
        return hyp, "cycle", Fraction(k), notes
    raise ValueError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREM_IDS)}")


def evaluate_theorem(
    g: EdgeColoredGraph, theorem: str, k: int | None = None, budget: SearchBudget = UNLIMITED
) -> TheoremReport:
    """Evaluate the hypotheses of ``theorem`` on g and, when they hold, check its conclusion."""
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREM_IDS)}")
    if theorem in _NEEDS_K:
        if k is None:
            raise PreconditionError(f"{theorem} needs a target length k")
        if k < _NEEDS_K[theorem]:
            raise PreconditionError(f"{theorem} is stated for k >= {_NEEDS_K[theorem]}, got k={k}")
    if g.n < 1:
        raise PreconditionError("empty graph")
    hyp, kind, bound, notes = _statement(g, theorem, k, budget)
    required = max(_ceil(bound), 3) if kind == "cycle" else max(_ceil(bound), 0)
    report = TheoremReport(
        theorem=theorem,
        n=g.n,
        k=k if theorem in _NEEDS_K else None,
        delta_c=min_color_degree(g),
        hypotheses=hyp,
        conclusion_kind=kind,
        conclusion_bound=bound,
        required_length=required,
        notes=notes,
    )
    if report.hypotheses_hold is not True:
        return report
    if kind == "cycle":
        q = has_rainbow_cycle_at_least(g, required, budget)
        report.nodes_expanded = q.nodes_expanded
        if q.answer is Answer.YES:
            report.witness = q.witness
            report.conclusion_verified = WITNESS
        else:
            report.conclusion_verified = REFUTED if q.answer is Answer.NO else UNKNOWN
    else:
        res = longest_rainbow_path(g, budget)
        report.nodes_expanded = res.nodes_expanded
        if res.best_witness is not None and res.best_length >= required:
            report.witness = res.best_witness
            report.conclusion_verified = WITNESS
        else:
            report.conclusion_verified = REFUTED if res.complete else UNKNOWN
    if report.witness is not None:
        _reverify(g, report)
    if report.counterexample:
        report.graph_text = format_graph(g)
    return report


def _reverify(g: EdgeColoredGraph, report: TheoremReport) -> None:
    w = report.witness
    edges = w.edges()
    if not (w.is_valid_in(g) and is_rainbow(g, edges) and w.length >= report.required_length):
        raise AssertionError(f"solver returned an invalid witness {w} for {report.theorem}")


@dataclass
class HuntResult:
    k: int
    examined: int = 0
    passed_filter: int = 0
    verified: int = 0
    unknown_dropped: int = 0
    candidates: list[TheoremReport] = field(default_factory=list)


def hunt_conjecture(graphs: Iterable[EdgeColoredGraph], k: int, budget: SearchBudget = UNLIMITED) -> HuntResult:
    """Search a stream for graphs meeting the conjectured color-degree bound but
    lacking a rainbow cycle of length >= k."""
    if k < 4:
        raise PreconditionError(f"conjecture hunt needs k >= 4, got {k}")
    out = HuntResult(k)
    for g in graphs:
        out.examined += 1
        if g.n < 1 or min_color_degree(g) < Fraction(g.n + k, 2):
            continue
        out.passed_filter += 1
        rep = evaluate_theorem(g, "Conjecture", k, budget)
        if rep.conclusion_verified == WITNESS:
            out.verified += 1
        elif rep.conclusion_verified == UNKNOWN:
            out.unknown_dropped += 1
        else:
            out.candidates.append(rep)
    return out


@dataclass(frozen=True)
class GuaranteeComparison:
    n: int
    delta_c: int
    k: int
    liwang_applicable: bool
    liwang_guarantee: Fraction
    main_guarantee: int
    main_applicable: bool
    difference: Fraction
    liwang_ruled_out_by_k: bool
    discussion_liwang_value: Fraction | None


def compare_guarantees(n: int, delta_c: int, k: int) -> GuaranteeComparison:
    """Cycle lengths guaranteed by the triangle-free bound and by the rainbow-C4-free bound.

    ``liwang_guarantee`` is delta_c - 3n/4 + 2 when delta_c >= 3n/4 + 1 (else
    0); ``main_guarantee`` is the largest k' with delta_c >= (n + 3k' - 2)/2.
    ``discussion_liwang_value`` is the closed form k + (k/2 - (n+6)/4) or
    k + (k/2 - (n+4)/4) that the published comparison assigns to the
    triangle-free bound when delta_c = (n+3k-1)/2 or (n+3k-2)/2 respectively
    (None otherwise); it is reported next to the literal value because the
    two disagree.
    """
    liwang_ok = delta_c >= Fraction(3 * n, 4) + 1
    liwang = delta_c - Fraction(3 * n, 4) + 2 if liwang_ok else Fraction(0)
    main = (2 * delta_c - n + 2) // 3
    if Fraction(2 * delta_c, 1) == n + 3 * k - 1:
        claimed = k + (Fraction(k, 2) - Fraction(n + 6, 4))
    elif Fraction(2 * delta_c, 1) == n + 3 * k - 2:
        claimed = k + (Fraction(k, 2) - Fraction(n + 4, 4))
    else:
        claimed = None
    return GuaranteeComparison(
        n=n,
        delta_c=delta_c,
        k=k,
        liwang_applicable=liwang_ok,
        liwang_guarantee=liwang,
        main_guarantee=main,
        main_applicable=main >= 5,
        difference=main - liwang,
        liwang_ruled_out_by_k=k < Fraction(n + 6, 6),
        discussion_liwang_value=claimed,
    )
