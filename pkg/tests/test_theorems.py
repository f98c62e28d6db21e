import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import complete_graph, cycle_graph, graphs
from rainbowlab import (
    THEOREM_IDS,
    PreconditionError,
    SearchBudget,
    compare_guarantees,
    evaluate_theorem,
    hunt_conjecture,
    is_rainbow,
)
from rainbowlab.generators import proper_complete, proper_complete_bipartite


def test_proper_k8_satisfies_cada2_and_finds_cycle():
    rep = evaluate_theorem(proper_complete(8), "Cada2")
    assert rep.delta_c == 7 and rep.hypotheses_hold is True
    assert rep.conclusion_verified == "witness"
    assert rep.witness.length >= 4 and is_rainbow(proper_complete(8), rep.witness.edges())
    assert not rep.falsified


@pytest.mark.parametrize("theorem", [t for t in THEOREM_IDS if t not in ("Main", "Main2", "Cor9", "Conjecture")])
def test_monochromatic_c5_fails_hypotheses(theorem):
    rep = evaluate_theorem(cycle_graph([0] * 5), theorem)
    assert rep.hypotheses_hold is False
    assert rep.conclusion_verified == "not-run" and rep.nodes_expanded == 0


def test_required_k():
    g = proper_complete(6)
    with pytest.raises(PreconditionError):
        evaluate_theorem(g, "Main")
    with pytest.raises(PreconditionError):
        evaluate_theorem(g, "Main", k=4)
    with pytest.raises(PreconditionError):
        evaluate_theorem(g, "Conjecture", k=3)
    with pytest.raises(ValueError):
        evaluate_theorem(g, "Nope")


def test_chen_li_bound_at_delta_seven():
    rep = evaluate_theorem(proper_complete(8), "ChenLi")
    assert rep.hypotheses_hold and rep.required_length == math.ceil(Fraction(14, 3)) + 1 == 6
    assert rep.conclusion_verified == "witness" and rep.witness.length >= 6


def test_das_bound():
    rep = evaluate_theorem(proper_complete(9), "Das")
    assert rep.delta_c == 8 and rep.hypotheses_hold
    assert rep.required_length == math.ceil(Fraction(24, 5)) == 5
    assert rep.conclusion_verified == "witness"
    assert evaluate_theorem(proper_complete(8), "Das").hypotheses_hold is False


def test_broersma_on_rainbow_cycle():
    rep = evaluate_theorem(cycle_graph(range(5)), "Broersma")
    assert rep.hypotheses_hold and rep.conclusion_bound == Fraction(10, 4)
    assert rep.required_length == 3 and rep.conclusion_verified == "witness"


def test_liwang_needs_triangle_free():
    rep = evaluate_theorem(proper_complete_bipartite(4, 4), "LiWang")
    assert rep.hypotheses["triangle_free"] is True
    assert rep.hypotheses["delta_c_at_least_3n/4+1"] is False


def test_main_on_dense_c4_rich_graph():
    rep = evaluate_theorem(proper_complete(16), "Main", k=5)
    assert rep.hypotheses["rainbow_c4_free"] is False
    assert rep.hypotheses_hold is False


def test_main2_and_cor9_report_all_hypotheses():
    rep = evaluate_theorem(proper_complete(10), "Main2", k=5)
    assert set(rep.hypotheses) == {
        "triangle_free",
        "rainbow_c4_free",
        "rainbow_path_at_least_3k/2_edges",
        "delta_c_at_least_(2n+3k-1)/4",
    }
    assert rep.hypotheses["rainbow_path_at_least_3k/2_edges"] is True
    cor = evaluate_theorem(proper_complete(10), "Cor9", k=3)
    assert cor.hypotheses["n_at_least_3k+1"] is True
    assert any(note.startswith("Main2 hypotheses also hold") for note in cor.notes)


def test_budget_exhaustion_is_unknown_not_refuted():
    rep = evaluate_theorem(proper_complete(12), "Cada2", budget=SearchBudget(max_nodes=1))
    assert rep.hypotheses_hold and rep.conclusion_verified == "unknown" and not rep.falsified
    rep = evaluate_theorem(cycle_graph(range(12)), "Main2", k=8, budget=SearchBudget(max_nodes=1))
    assert rep.hypotheses["rainbow_path_at_least_3k/2_edges"] is None


def test_refuted_report_carries_graph(monkeypatch):
    import rainbowlab.theorems as th
    from rainbowlab.search import Answer, CycleQuery

    def no_cycle(g, k, budget=None, backend=None):
        return CycleQuery(k, Answer.NO, None, 1, g.key())

    monkeypatch.setattr(th, "has_rainbow_cycle_at_least", no_cycle)
    rep = th.evaluate_theorem(proper_complete(8), "Cada2")
    assert rep.conclusion_verified == "refuted" and rep.falsified and rep.counterexample
    assert rep.graph_text.startswith("8 28")
    assert not th.evaluate_theorem(proper_complete(8), "Conjecture", k=4).falsified


def test_hunt_filters_monochromatic_graphs():
    graphs_ = [complete_graph(n, lambda u, v: 0) for n in range(3, 8)]
    out = hunt_conjecture(graphs_, 4)
    assert out.examined == 5 and out.passed_filter == 0 and not out.candidates


def test_hunt_on_proper_complete_graphs():
    out = hunt_conjecture([proper_complete(n) for n in range(6, 11)], 4)
    assert out.passed_filter == 5 and out.verified == 5 and not out.candidates
    with pytest.raises(PreconditionError):
        hunt_conjecture([], 3)


def test_compare_worked_example():
    cmp = compare_guarantees(16, 13, 4)
    assert cmp.liwang_applicable and cmp.liwang_guarantee == 3
    assert cmp.main_guarantee == 4
    assert cmp.difference == 1


def test_compare_flags():
    assert not compare_guarantees(16, 12, 4).liwang_applicable
    assert compare_guarantees(16, 12, 4).liwang_guarantee == 0
    assert compare_guarantees(30, 30, 5).liwang_ruled_out_by_k
    assert not compare_guarantees(30, 30, 6).liwang_ruled_out_by_k


@pytest.mark.parametrize("n", range(8, 40, 3))
@pytest.mark.parametrize("k", range(5, 12))
def test_compare_literal_difference(n, k):
    # main guarantee is exactly k at both parities; the literal difference is then
    # k - (delta - 3n/4 + 2)
    for delta, offset in ((Fraction(n + 3 * k - 1, 2), 6), (Fraction(n + 3 * k - 2, 2), 4)):
        if delta.denominator != 1:
            continue
        cmp = compare_guarantees(n, int(delta), k)
        assert cmp.main_guarantee == k
        if cmp.liwang_applicable:
            assert cmp.difference == Fraction(n - offset, 4) - Fraction(k, 2)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_no_falsification_on_small_graphs(g):
    for theorem in ("LiWang", "Cada2", "Das", "ChenLi", "Broersma"):
        rep = evaluate_theorem(g, theorem)
        assert not rep.falsified
    for k in (5, 6):
        assert not evaluate_theorem(g, "Main", k=k).falsified
        assert not evaluate_theorem(g, "Main2", k=k).falsified
