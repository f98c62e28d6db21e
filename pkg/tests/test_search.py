import os
import random
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import colored, complete_graph, cycle_graph, graphs, random_graph
from rainbowlab import (
    Answer,
    EdgeColoredGraph,
    SearchBudget,
    VertexCycle,
    certify_c4,
    has_rainbow_c4,
    has_rainbow_cycle_at_least,
    is_rainbow,
    longest_rainbow_cycle,
    longest_rainbow_path,
    oracle_enumerate,
    oracle_max_length,
    oracle_maxima,
)
from rainbowlab import kernels
from rainbowlab.generators import proper_complete, proper_complete_bipartite


def rainbow_k4():
    return complete_graph(4, lambda u, v: (u, v))


def test_single_vertex_path(backend):
    res = longest_rainbow_path(EdgeColoredGraph(1, []), backend=backend)
    assert res.best_length == 0 and res.best_witness.vertices == (0,) and res.complete


def test_path_needs_a_vertex():
    with pytest.raises(ValueError):
        longest_rainbow_path(EdgeColoredGraph(0, []))


def test_triangle_cycles(backend):
    res = longest_rainbow_cycle(colored(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]), backend=backend)
    assert res.best_length == 3 and res.best_witness.vertices == (0, 1, 2)
    res = longest_rainbow_cycle(colored(3, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]), backend=backend)
    assert res.best_length == 0 and res.best_witness is None and res.complete


def test_rainbow_c5_queries(backend):
    g = cycle_graph(range(5))
    yes = has_rainbow_cycle_at_least(g, 5, backend=backend)
    assert yes.answer is Answer.YES and yes.witness.length == 5
    no = has_rainbow_cycle_at_least(g, 6, backend=backend)
    assert no.answer is Answer.NO and no.witness is None
    assert no.certifies_absence(g, 6) and no.certifies_absence(g, 7)
    assert not no.certifies_absence(g, 5)


def test_k_below_three_rejected():
    with pytest.raises(ValueError):
        has_rainbow_cycle_at_least(cycle_graph(range(3)), 2)


def test_proper_k5_matches_oracle(backend):
    g = proper_complete(5)
    cycles = oracle_enumerate(g, "cycle")
    expected = any(c.length >= 4 for c in cycles)
    q = has_rainbow_cycle_at_least(g, 4, backend=backend)
    assert (q.answer is Answer.YES) == expected
    assert longest_rainbow_cycle(g, backend=backend).best_length == max(c.length for c in cycles)


def test_rainbow_c4_detection(backend):
    assert has_rainbow_c4(cycle_graph([1, 2, 3, 4]), backend=backend) is not None
    assert has_rainbow_c4(cycle_graph([1, 2, 1, 2]), backend=backend) is None


def test_k44_proper_c4_matches_brute_force(backend):
    g = proper_complete_bipartite(4, 4)
    left, right = range(4), range(4, 8)
    four_cycles = [(a, x, b, y) for a, b in combinations(left, 2) for x, y in combinations(right, 2)]
    assert len(four_cycles) == 36
    rainbow = [c for c in four_cycles if is_rainbow(g, VertexCycle(c).edges())]
    found = has_rainbow_c4(g, backend=backend)
    assert (found is not None) == bool(rainbow)
    if found is not None:
        assert found.length == 4 and is_rainbow(g, found.edges())
    oracle_c4 = [c for c in oracle_enumerate(g, "cycle") if c.length == 4]
    assert len(oracle_c4) == len(rainbow)


def test_c4_certificate_binds_to_graph():
    g = cycle_graph([1, 2, 1, 2])
    cert = certify_c4(g)
    assert cert.found is None and cert.certifies_free(g)
    assert not cert.certifies_free(cycle_graph([1, 2, 3, 4]))


def test_oracle_counts():
    assert len(oracle_enumerate(colored(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]), "cycle")) == 1
    cycles = oracle_enumerate(rainbow_k4(), "cycle")
    assert len(cycles) == 7
    assert sorted(c.length for c in cycles) == [3, 3, 3, 3, 4, 4, 4]
    assert oracle_enumerate(EdgeColoredGraph(4, []), "cycle") == []
    # every path once, single vertices included: 4 + 6 + 12 + 12
    assert len(oracle_enumerate(rainbow_k4(), "path")) == 34


def test_witness_is_lexicographically_first():
    g = rainbow_k4()
    assert longest_rainbow_path(g).best_witness.vertices == (0, 1, 2, 3)
    assert longest_rainbow_cycle(g).best_witness.vertices == (0, 1, 2, 3)
    paths = [p for p in oracle_enumerate(g, "path") if p.length == 3]
    assert min(p.vertices for p in paths) == (0, 1, 2, 3)


def test_node_budget_reports_incomplete(backend):
    g = proper_complete(9)
    res = longest_rainbow_path(g, SearchBudget(max_nodes=5), backend=backend)
    assert not res.complete and res.nodes_expanded <= 5
    assert not res.certifies(g)
    q = has_rainbow_cycle_at_least(proper_complete(9), 9, SearchBudget(max_nodes=3), backend=backend)
    assert q.answer in (Answer.UNKNOWN, Answer.YES)
    zero = longest_rainbow_path(g, SearchBudget(max_nodes=0), backend=backend)
    assert not zero.complete and zero.best_witness is None


def test_time_budget_is_cooperative():
    res = longest_rainbow_cycle(proper_complete(13), SearchBudget(max_time=0.05))
    assert res.best_length >= 3


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=-1)
    with pytest.raises(ValueError):
        SearchBudget(max_time=0)


def test_certificate_rejects_other_graph():
    res = longest_rainbow_path(rainbow_k4())
    assert res.certifies(rainbow_k4())
    assert not res.certifies(complete_graph(4, lambda u, v: 0))


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="extension not built")
def test_backends_agree_including_node_counts():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.3, 0.6, 0.9]), lambda m: rng.randint(1, max(1, m)))
        for op in (longest_rainbow_path, longest_rainbow_cycle):
            a, b = op(g, backend="python"), op(g, backend="compiled")
            assert (a.best_length, a.best_witness, a.nodes_expanded) == (b.best_length, b.best_witness, b.nodes_expanded)
        assert has_rainbow_c4(g, backend="python") == has_rainbow_c4(g, backend="compiled")
        for k in (3, 4, 5):
            a = has_rainbow_cycle_at_least(g, k, backend="python")
            b = has_rainbow_cycle_at_least(g, k, backend="compiled")
            assert (a.answer, a.witness, a.nodes_expanded) == (b.answer, b.witness, b.nodes_expanded)


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="extension not built")
def test_large_graph_falls_back_to_python():
    assert kernels.for_graph(65) is kernels._fallback
    g = cycle_graph(range(70))
    assert longest_rainbow_cycle(g).best_length == 70


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_solvers_match_oracle(g):
    paths = oracle_enumerate(g, "path")
    cycles = oracle_enumerate(g, "cycle")
    res_p = longest_rainbow_path(g)
    res_c = longest_rainbow_cycle(g)
    assert res_p.best_length == max(p.length for p in paths)
    assert res_c.best_length == max((c.length for c in cycles), default=0)
    # lexicographically first optimal canonical witness
    assert res_p.best_witness == min((p for p in paths if p.length == res_p.best_length), key=lambda p: p.vertices)
    if cycles:
        best = [c for c in cycles if c.length == res_c.best_length]
        assert res_c.best_witness == min(best, key=lambda c: c.vertices)
    assert (has_rainbow_c4(g) is not None) == any(c.length == 4 for c in cycles)
    for k in range(3, g.n + 2):
        q = has_rainbow_cycle_at_least(g, k)
        assert (q.answer is Answer.YES) == any(c.length >= k for c in cycles)
        if q.witness is not None:
            assert q.witness.length >= k and is_rainbow(g, q.witness.edges())


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_witnesses_are_rainbow_and_bounded(g):
    res = longest_rainbow_path(g)
    assert res.best_witness.is_valid_in(g) and is_rainbow(g, res.best_witness.edges())
    assert res.best_length <= min(g.n - 1, g.num_colors)
    cyc = longest_rainbow_cycle(g)
    if cyc.best_witness is not None:
        assert cyc.best_witness.is_valid_in(g) and is_rainbow(g, cyc.best_witness.edges())
        assert cyc.best_witness == cyc.best_witness.canonical()
        # a rainbow cycle minus one edge is a rainbow path
        assert cyc.best_length - 1 <= res.best_length
    assert res.best_witness.vertices[0] <= res.best_witness.vertices[-1]


def test_oracle_refuses_large_graphs():
    with pytest.raises(ValueError):
        oracle_max_length(proper_complete(11), "path")


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_streaming_oracle_matches_enumeration(g):
    assert oracle_maxima(g) == (oracle_max_length(g, "path"), oracle_max_length(g, "cycle"))


def test_environment_forces_fallback():
    code = "from rainbowlab import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, RAINBOWLAB_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
