"""Acceptance suite.  Each test prints one PASS/FAIL line (run with ``-s`` to
see them inline; they are printed through ``capsys.disabled`` either way)."""

import math
import random
import time
from fractions import Fraction

import pytest

from conftest import spine_graph
from rainbowlab import (
    compare_guarantees,
    format_graph,
    longest_rainbow_cycle,
    longest_rainbow_path,
    min_color_degree,
)
from rainbowlab.cli import main
from rainbowlab.generators import GenSpec, generate, parse_genspec
from rainbowlab.oracle import oracle_maxima
from rainbowlab.sweep import Tally, TaskParams, run_items, run_sweep

SWEEP_N = range(1, 8)


@pytest.fixture
def verdict(capsys):
    def emit(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        return ok

    return emit


def sweep(task, prm, ns=SWEEP_N, **gen):
    total = Tally()
    for n in ns:
        total.merge(run_sweep(GenSpec("exhaustive-enum", n=n, **gen), task, prm))
    return total.finish()


def test_oracle_equivalence(verdict):
    combos = [(n, p, pal) for n in range(4, 10) for p in (0.3, 0.5, 0.8) for pal in ("2", "half", "full")]
    start = time.perf_counter()
    mismatches, count = [], 0
    for i, (n, p, pal) in enumerate(combos):
        spec = GenSpec("random-gnp", n=n, p=p, palette=pal, count=10 if i < 14 else 9, seed=1000 + i)
        for g in generate(spec):
            count += 1
            got = (longest_rainbow_path(g).best_length, longest_rainbow_cycle(g).best_length)
            if got != oracle_maxima(g):
                mismatches.append(format_graph(g))
    elapsed = time.perf_counter() - start
    ok = count == 500 and not mismatches and elapsed < 60
    assert verdict("oracle-equivalence", ok, f"{count} graphs, {len(mismatches)} mismatches, {elapsed:.1f}s (< 60s)")


@pytest.mark.slow
def test_lemma_suite(verdict):
    start = time.perf_counter()
    tally = sweep("check-lemmas", TaskParams())
    elapsed = time.perf_counter() - start
    c = tally.counters
    ok = c["falsified"] == 0 and c["unknown"] == 0 and c["hypotheses_hold"] > 0 and elapsed < 600
    detail = (
        f"{c['items']} items, {c['hypotheses_hold']} certified, "
        f"{c['lemma1_violations']} + {c['lemma2_violations']} violations, {elapsed:.0f}s (< 600s)"
    )
    assert verdict("lemma-suite", ok, detail)


def test_rainbow_cycle_of_length_four(verdict):
    # graphs below the degree threshold fail the hypotheses and pass trivially
    tally = Tally()
    for n in SWEEP_N:
        tally.merge(run_sweep(GenSpec("exhaustive-enum", n=n, min_delta_c=n // 2 + 3), "Cada2", TaskParams()))
    slowest = 0.0
    for n in range(8, 15):
        start = time.perf_counter()
        part = run_sweep(GenSpec("complete-proper", n=n), "Cada2", TaskParams())
        slowest = max(slowest, time.perf_counter() - start)
        tally.merge(part)
        assert part.counters["hypotheses_hold"] == 1
    c = tally.finish().counters
    ok = c["falsified"] == 0 and c["unknown"] == 0 and slowest < 30
    detail = f"{c['hypotheses_hold']} instances with hypotheses, {c['falsified']} violations, slowest K_n {slowest:.2f}s"
    assert verdict("cycle-of-length-four", ok, detail)


EXTRA_DENSE = [f"family=complete-proper,n={n}" for n in range(8, 15)] + [
    f"family=random-gnp,n={n},p=0.95,count=60,seed={n}" for n in range(8, 13)
]


@pytest.mark.parametrize("theorem,threshold,bound", [
    ("ChenLi", 7, lambda d: math.ceil(Fraction(2 * d, 3)) + 1),
    ("Das", 8, lambda d: math.ceil(Fraction(3 * d, 5))),
])
def test_path_bounds(verdict, theorem, threshold, bound):
    in_sweep = sweep(theorem, TaskParams(), min_delta_c=threshold).counters["items"]
    tally = Tally()
    direct_checked = direct_bad = 0
    for text in EXTRA_DENSE:
        spec = parse_genspec(text)
        tally.merge(run_sweep(spec, theorem, TaskParams()))
        for g in generate(spec):
            d = min_color_degree(g)
            if d >= threshold:
                direct_checked += 1
                direct_bad += longest_rainbow_path(g).best_length < bound(d)
    c = tally.finish().counters
    ok = c["falsified"] == 0 and c["unknown"] == 0 and direct_bad == 0 and c["hypotheses_hold"] == direct_checked
    detail = (
        f"sweep instances {in_sweep} (n <= 7 forces delta_c <= 6), extra families {c['hypotheses_hold']}, "
        f"violations {c['falsified']} via theorem task, {direct_bad} via longest path"
    )
    assert verdict(f"path-bound-{theorem}", ok, detail)


@pytest.mark.slow
def test_proof_trace_suite(verdict):
    prm = TaskParams(k=5)
    in_sweep = sweep("trace", prm).counters
    rng = random.Random(11)
    spines = run_items("trace", ((i, spine_graph(rng)) for i in range(4000)), prm)
    gnp = Tally()
    for n in range(10, 14):
        gnp.merge(run_sweep(GenSpec("random-gnp", n=n, p=0.2, count=300, seed=n), "trace", prm))
    total = Tally()
    for part in (spines, gnp.finish()):
        total.merge(part)
    c = total.finish().counters
    fails = {k: v for k, v in c.items() if k.startswith("fail.")}
    ok = in_sweep["falsified"] == 0 and c["falsified"] == 0 and not fails and c["hypotheses_hold"] > 0
    detail = (
        f"sweep certified {in_sweep['hypotheses_hold']} of {in_sweep['items']}, constructed certified "
        f"{c['hypotheses_hold']} ({c['traces']} traces), failures {sum(fails.values())}, "
        f"full-hypothesis instances {in_sweep['main_hypothesis_holds'] + c['main_hypothesis_holds']}"
    )
    assert verdict("proof-trace", ok, detail)


def test_conjecture_hunt(verdict):
    start = time.perf_counter()
    tally = Tally()
    for n in range(1, 9):
        spec = GenSpec("exhaustive-enum", n=n, min_delta_c=Fraction(n + 4, 2))
        tally.merge(run_sweep(spec, "hunt", TaskParams(k=4)))
    elapsed = time.perf_counter() - start
    c = tally.finish().counters
    ok = c["candidates"] == 0 and c["unknown"] == 0 and elapsed < 1800
    detail = f"{c['hypotheses_hold']} graphs passed the filter, {c['candidates']} candidates, {elapsed:.1f}s"
    assert verdict("conjecture-hunt", ok, detail)


def comparison_pairs():
    pairs = []
    for n in range(8, 200):
        for k in range(5, 40):
            delta = math.ceil(Fraction(n + 3 * k - 2, 2))
            if delta <= n - 1 and compare_guarantees(n, delta, k).liwang_applicable:
                pairs.append((n, k, delta))
    return pairs[::7][:100]


def test_guarantee_comparison(verdict):
    pairs = comparison_pairs()
    assert len(pairs) == 100
    misses = []
    for n, k, delta in pairs:
        diff = compare_guarantees(n, delta, k).difference
        if diff not in (Fraction(n + 4, 4) - Fraction(k, 2), Fraction(n + 6, 4) - Fraction(k, 2)):
            misses.append((n, k, diff))
    n, k, diff = misses[0] if misses else (None, None, None)
    detail = f"{100 - len(misses)}/100 pairs match (n+4)/4 - k/2 or (n+6)/4 - k/2"
    if misses:
        detail += f"; e.g. n={n}, k={k}: difference {diff}"
    assert verdict("guarantee-comparison", not misses, detail)


DETERMINISM_RUNS = [
    ["sweep", "n=6", "solve"],
    ["sweep", "n=5", "check-lemmas", "--records", "all"],
    ["trace", "--gen", "family=random-gnp,n=12,p=0.2,count=300,seed=3", "--k", 5, "--records", "all"],
    ["hunt", "--gen", "family=exhaustive-enum,n=8,min_delta_c=6", "--records", "all"],
    ["eval-theorem", "Cada2", "--gen", "family=random-gnp,n=9,p=0.9,count=100", "--seed", 5],
    ["compare", "--n", 16, "--k", 4, "--delta-c", 13],
]


def test_determinism(verdict, tmp_path, capsys):
    bad = []
    for i, argv in enumerate(DETERMINISM_RUNS):
        outs = []
        for threads in (1, 4):
            first = tmp_path / f"{i}-{threads}.txt"
            again = tmp_path / f"{i}-{threads}-rerun.txt"
            flags = [] if argv[0] == "compare" else ["--threads", str(threads)]
            assert main([str(a) for a in argv] + flags + ["--out", str(first)]) in (0, 2)
            main(["rerun", str(first), "--threads", str(threads), "--out", str(again)])
            outs += [first.read_bytes(), again.read_bytes()]
        if len(set(outs)) != 1:
            bad.append(" ".join(map(str, argv)))
    capsys.readouterr()
    detail = f"{len(DETERMINISM_RUNS) - len(bad)}/{len(DETERMINISM_RUNS)} experiments byte-identical on rerun and threads 1/4"
    assert verdict("determinism", not bad, detail + (f"; differ: {bad}" if bad else ""))
