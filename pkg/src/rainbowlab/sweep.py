"""Per-item experiment tasks and the sharded sweep driver.

A task maps one ``(index, graph)`` item to counter increments, extremal
statistics and (optionally) a record.  Tallies from shards merge by summing
counters, taking maxima, and ordering records by item index, so the merged
result does not depend on how many workers ran.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .generators import GenSpec, generate_indexed
from .graph import ColorSet, EdgeColoredGraph, format_graph, min_color_degree
from .lemmas import (
    _path_color_positions,
    lemma1_unchecked,
    lemma2_common_mask,
    lemma2_splits,
    require_longest_path,
    require_no_cycle_at_least,
)
from .report import graph_field, search_pairs, theorem_pairs, trace_pairs
from .search import (
    UNLIMITED,
    Answer,
    SearchBudget,
    certify_c4,
    has_rainbow_c4,
    has_rainbow_cycle_at_least,
    longest_rainbow_cycle,
    longest_rainbow_path,
)
from .theorems import THEOREM_IDS, evaluate_theorem
from .trace import PRIMARY_CHECKS, compute_proof_trace, verify_trace_inequalities

TASKS = ("solve", "check-lemmas", "trace", "hunt") + THEOREM_IDS


@dataclass
class TaskParams:
    k: int | None = None
    s: int | None = None
    t: int | None = None
    budget: SearchBudget = UNLIMITED
    records: str = "notable"  # "all" or "notable"


@dataclass
class Tally:
    counters: Counter = field(default_factory=Counter)
    max_cycle_by_delta: dict[int, int] = field(default_factory=dict)
    records: list[tuple[int, list]] = field(default_factory=list)

    def bump(self, key: str, by: int = 1) -> None:
        self.counters[key] += by

    def cycle_stat(self, delta: int, length: int) -> None:
        if length > self.max_cycle_by_delta.get(delta, -1):
            self.max_cycle_by_delta[delta] = length

    def merge(self, other: Tally) -> None:
        self.counters.update(other.counters)
        for d, L in other.max_cycle_by_delta.items():
            self.cycle_stat(d, L)
        self.records.extend(other.records)

    def finish(self) -> Tally:
        self.records.sort(key=lambda r: r[0])
        return self

    @property
    def falsified(self) -> int:
        return self.counters["falsified"]

    @property
    def unknown(self) -> int:
        return self.counters["unknown"]


def _graph_pairs(g: EdgeColoredGraph) -> list:
    return [("graph", graph_field(format_graph(g)))]


# --- tasks ----------------------------------------------------------------


def task_solve(idx: int, g: EdgeColoredGraph, prm: TaskParams, tally: Tally) -> None:
    tally.bump("items")
    path = longest_rainbow_path(g, prm.budget)
    cycle = longest_rainbow_cycle(g, prm.budget)
    c4 = has_rainbow_c4(g)
    delta = min_color_degree(g)
    complete = path.complete and cycle.complete
    tally.bump("verified" if complete else "unknown")
    if cycle.complete:
        tally.cycle_stat(delta, cycle.best_length)
    if prm.records == "all" or not complete:
        pairs = [("kind", "solve"), ("n", g.n), ("m", g.num_edges), ("colors", g.num_colors), ("delta_c", delta)]
        pairs += search_pairs("best_path", path) + search_pairs("best_cycle", cycle)
        pairs.append(("rainbow_c4", c4))
        tally.records.append((idx, pairs))


def _splits(k: int, p: int, prm: TaskParams) -> tuple[list[tuple[int, int]], int]:
    """(applicable splits, number of inapplicable ones) for one k."""
    if prm.s is not None or prm.t is not None:
        s = prm.s if prm.s is not None else k - prm.t
        t = prm.t if prm.t is not None else k - prm.s
        ok = s >= 1 and t >= 1 and s + t == k and s in lemma2_splits(p, k)
        return ([(s, t)], 0) if ok else ([], 1)
    good = lemma2_splits(p, k)
    return [(s, k - s) for s in good], k - 1 - len(good)


def task_check_lemmas(idx: int, g: EdgeColoredGraph, prm: TaskParams, tally: Tally) -> None:
    tally.bump("items")
    path = longest_rainbow_path(g, prm.budget)
    cycle = longest_rainbow_cycle(g, prm.budget)
    if not (path.complete and cycle.complete):
        tally.bump("unknown")
        tally.records.append((idx, [("kind", "lemmas"), ("status", "unknown")] + _graph_pairs(g)))
        return
    delta = min_color_degree(g) if g.n else 0
    tally.cycle_stat(delta, cycle.best_length)
    p, longest_cycle = path.best_witness.p, cycle.best_length
    if prm.k is not None:
        ks = [prm.k] if longest_cycle < prm.k <= p and prm.k >= 3 else []
    else:
        ks = list(range(max(3, longest_cycle + 1), p + 1))
    if not ks:
        tally.bump("preconditions_unmet")
        if prm.records == "all":
            tally.records.append((idx, [("kind", "lemmas"), ("status", "preconditions_unmet")]))
        return
    tally.bump("hypotheses_hold")
    counters = tally.counters
    violations = []
    orientations = [path.best_witness, path.best_witness.reversed()]
    for P in orientations:
        require_longest_path(g, P, path)
        pos = _path_color_positions(g, P)
        for k in ks:
            require_no_cycle_at_least(g, k, cycle)
            v1 = lemma1_unchecked(g, P, k, pos)
            counters["lemma1_checks"] += 1
            if not v1.holds:
                tally.bump("lemma1_violations")
                violations.append((P, k, None, None, v1.violation))
            splits, skipped = _splits(k, p, prm)
            counters["lemma2_inapplicable"] += skipped
            counters["lemma2_checks"] += len(splits)
            for s, t in splits:
                common = lemma2_common_mask(g, P, k, s, t)
                if common & (common - 1):  # two or more shared colors
                    counters["lemma2_violations"] += 1
                    violations.append((P, k, s, t, tuple(ColorSet.from_mask(common))))
    tally.bump("falsified" if violations else "verified")
    if violations:
        pairs = [("kind", "lemmas"), ("status", "VIOLATION")]
        for P, k, s, t, what in violations:
            lemma = "lemma1" if s is None else "lemma2"
            pairs.append(("violation", f"{lemma} path={P} k={k} s={s} t={t} detail={what}"))
        tally.records.append((idx, pairs + _graph_pairs(g)))
    elif prm.records == "all":
        tally.records.append(
            (idx, [("kind", "lemmas"), ("status", "holds"), ("path", path.best_witness), ("ks", ks)])
        )


def task_trace(idx: int, g: EdgeColoredGraph, prm: TaskParams, tally: Tally) -> None:
    k = prm.k if prm.k is not None else 5
    tally.bump("items")
    path = longest_rainbow_path(g, prm.budget)
    if not path.complete:
        tally.bump("unknown")
        return
    if path.best_witness.p < 2 * k:
        tally.bump("path_too_short")
        return
    c4 = certify_c4(g)
    if c4.found is not None:
        tally.bump("has_rainbow_c4")
        return
    query = has_rainbow_cycle_at_least(g, k, prm.budget)
    if query.answer is Answer.YES:
        tally.bump("has_long_cycle")
        return
    if query.answer is Answer.UNKNOWN:
        tally.bump("unknown")
        return
    tally.bump("hypotheses_hold")
    delta = min_color_degree(g)
    if delta >= Fraction(g.n + 3 * k - 2, 2):
        tally.bump("main_hypothesis_holds")
    failed = False
    for P in (path.best_witness, path.best_witness.reversed()):
        trace = compute_proof_trace(g, k, path, P)
        verdict = verify_trace_inequalities(trace, g, query, c4)
        tally.bump("traces")
        if not trace.closing_edge:
            tally.bump("closing_edge_absent")
        for chk in verdict.checks:
            if not chk.holds:
                tally.bump(f"fail.{chk.name}")
        if not verdict.holds:
            failed = True
            tally.records.append((idx, trace_pairs(trace, verdict) + _graph_pairs(g)))
        elif prm.records == "all":
            tally.records.append((idx, trace_pairs(trace, verdict)))
    tally.bump("falsified" if failed else "verified")


def task_hunt(idx: int, g: EdgeColoredGraph, prm: TaskParams, tally: Tally) -> None:
    k = prm.k if prm.k is not None else 4
    tally.bump("items")
    if g.n < 1 or min_color_degree(g) < Fraction(g.n + k, 2):
        return
    tally.bump("hypotheses_hold")
    rep = evaluate_theorem(g, "Conjecture", k, prm.budget)
    if rep.conclusion_verified == "witness":
        tally.bump("verified")
    elif rep.conclusion_verified == "unknown":
        tally.bump("unknown")
    else:
        tally.bump("candidates")
        tally.bump("falsified")
        tally.records.append((idx, theorem_pairs(rep)))
        return
    if prm.records == "all":
        tally.records.append((idx, theorem_pairs(rep)))


def task_theorem(theorem: str):
    def run(idx: int, g: EdgeColoredGraph, prm: TaskParams, tally: Tally) -> None:
        rep = evaluate_theorem(g, theorem, prm.k, prm.budget)
        tally.bump("items")
        hh = rep.hypotheses_hold
        tally.bump("hypotheses_hold" if hh else ("hypotheses_unknown" if hh is None else "hypotheses_fail"))
        if hh is None:
            tally.bump("unknown")
        else:
            tally.bump(
                {"witness": "verified", "refuted": "refuted", "unknown": "unknown", "not-run": "not_run"}[
                    rep.conclusion_verified
                ]
            )
        if rep.falsified:
            tally.bump("falsified")
        if rep.conclusion_kind == "cycle" and rep.witness is not None:
            tally.cycle_stat(rep.delta_c, rep.witness.length)
        notable = rep.conclusion_verified in ("refuted", "unknown") or hh is None
        if prm.records == "all" or notable:
            pairs = theorem_pairs(rep)
            if notable and rep.graph_text is None:
                pairs += _graph_pairs(g)
            tally.records.append((idx, pairs))

    return run


def get_task(name: str):
    if name == "solve":
        return task_solve
    if name == "check-lemmas":
        return task_check_lemmas
    if name == "trace":
        return task_trace
    if name == "hunt":
        return task_hunt
    if name in THEOREM_IDS:
        return task_theorem(name)
    raise ValueError(f"unknown task {name!r}; expected one of {', '.join(TASKS)}")


def run_items(task: str, items, prm: TaskParams) -> Tally:
    fn = get_task(task)
    tally = Tally()
    for idx, g in items:
        fn(idx, g, prm, tally)
    return tally.finish()


def _shard_worker(args) -> Tally:
    spec, task, prm = args
    return run_items(task, generate_indexed(spec), prm)


def run_sweep(spec: GenSpec, task: str, prm: TaskParams, threads: int = 1) -> Tally:
    """Run ``task`` over every item of ``spec``, optionally across worker processes.

    A spec that is already a shard runs in-process.
    """
    get_task(task)
    if threads <= 1 or spec.shard != (0, 1):
        return run_items(task, generate_indexed(spec), prm)
    jobs = [(replace(spec, shard=(i, threads)), task, prm) for i in range(threads)]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(threads) as pool:
        parts = pool.map(_shard_worker, jobs)
    total = Tally()
    for part in parts:
        total.merge(part)
    return total.finish()


def summary_pairs(tally: Tally) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = [(f"count.{k}", v) for k, v in sorted(tally.counters.items())]
    pairs += [(f"max_cycle.delta_c_{d}", L) for d, L in sorted(tally.max_cycle_by_delta.items())]
    return pairs


PRIMARY_TRACE_CHECKS = PRIMARY_CHECKS
