import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from rainbowlab import EdgeColoredGraph
from rainbowlab import kernels


def colored(n, triples):
    return EdgeColoredGraph(n, triples)


def cycle_graph(colors):
    n = len(colors)
    return EdgeColoredGraph(n, [(i, (i + 1) % n, c) for i, c in enumerate(colors)])


def complete_graph(n, color_of):
    return EdgeColoredGraph(n, [(u, v, color_of(u, v)) for u, v in combinations(range(n), 2)])


def random_graph(rng, n, p, palette):
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    q = max(1, palette(len(edges)))
    return EdgeColoredGraph(n, [(u, v, rng.randrange(q)) for u, v in edges])


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    chosen = [e for e, keep in zip(pairs, mask) if keep]
    q = draw(st.integers(1, max(1, len(chosen))))
    cols = draw(st.lists(st.integers(0, q - 1), min_size=len(chosen), max_size=len(chosen)))
    return EdgeColoredGraph(n, [(u, v, c) for (u, v), c in zip(chosen, cols)])


BACKENDS = ["python"] + (["compiled"] if kernels.BACKEND == "compiled" else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20260101)


def spine_graph(rng, min_len=10, max_len=13, max_extra=3):
    """A rainbow path on 10..13 vertices with chords reusing its colors and a
    few vertices off the path; a source of long-path, short-cycle instances."""
    length = rng.randint(min_len, max_len)
    n = length + rng.randint(0, max_extra)
    order = list(range(n))
    rng.shuffle(order)
    spine = order[:length]
    edges = {tuple(sorted(e)): i for i, e in enumerate(zip(spine, spine[1:]))}
    ncolors = length - 1 + rng.randint(0, 3)
    for _ in range(rng.randint(2, length + 4)):
        e = tuple(sorted(rng.sample(range(n), 2)))
        edges.setdefault(e, rng.randrange(ncolors))
    return EdgeColoredGraph(n, [(u, v, c) for (u, v), c in edges.items()])
