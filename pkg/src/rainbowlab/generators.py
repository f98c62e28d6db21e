"""Seeded, reproducible graph families.

Seed splitting
--------------
Every random choice is drawn from ``random.Random(derive_seed(seed, *tags))``
where ``derive_seed`` hashes the 64-bit master seed together with integer or
string tags (BLAKE2b, 8-byte digest).  A random-gnp item uses tags
``("gnp", index)``; the sampled colorings of an exhaustive-enum graph use
``("enum", n, edge_mask)``.  Items therefore do not depend on stream position,
which is what makes sharding (``shard=i/m``) produce the same items as a full
run.

Exhaustive colorings
--------------------
For every labeled graph on n vertices (edge masks in increasing order, bit i
= i-th pair of ``itertools.combinations(range(n), 2)``) the stream yields:
the monochromatic coloring, the all-distinct coloring (skipped when it
coincides with the monochromatic one, i.e. m <= 1), then ``samples`` random
colorings, each drawing a palette size q uniformly from 1..m and every edge
color uniformly from q labels.  Item ``j`` of the graph with edge mask ``M``
has index ``M * (samples + 2) + j``, so a degree-pruned stream is an exact
sub-stream of the unpruned one.  Shards split the surviving graphs in blocks
of 64 by their rank in the (pruned) mask order.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .errors import SpecError
from .graph import EdgeColoredGraph, is_triangle_free, min_color_degree
from .search import certify_c4

__all__ = [
    "FAMILIES",
    "GenSpec",
    "CertifiedGraph",
    "derive_seed",
    "generate",
    "filter_certified",
    "parse_genspec",
    "load_genspec",
    "proper_complete",
    "proper_complete_bipartite",
    "rainbow_cycle_graph",
]

FAMILIES = ("random-gnp", "complete-proper", "complete-bipartite-proper", "cycle", "exhaustive-enum", "filtered")
SHARD_BLOCK = 64
MAX_ENUM_N = 8


def derive_seed(seed: int, *tags: int | str) -> int:
    h = hashlib.blake2b(digest_size=8)
    h.update((seed & 0xFFFFFFFFFFFFFFFF).to_bytes(8, "little"))
    for tag in tags:
        h.update(b"\x00" + str(tag).encode())
    return int.from_bytes(h.digest(), "little")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    p: float = 0.5
    palette: str = "full"  # "full" (= m), "half" (= m // 2) or an integer
    count: int = 1
    seed: int = 0
    samples: int = 2
    min_degree: int = 0
    a: int = 0
    b: int = 0
    base: str = ""
    triangle_free: bool = False
    rainbow_c4_free: bool = False
    min_delta_c: Fraction | None = None
    shard: tuple[int, int] = (0, 1)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        fam = self.base if self.family == "filtered" else self.family
        if self.family == "filtered" and (self.base not in FAMILIES or self.base == "filtered"):
            raise SpecError("filtered family needs base=<family>")
        if fam == "complete-proper" and self.n < 2:
            raise SpecError("complete-proper needs n >= 2")
        if fam == "cycle" and self.n < 3:
            raise SpecError("cycle needs n >= 3")
        if fam == "complete-bipartite-proper" and (self.a < 1 or self.b < 1):
            raise SpecError("complete-bipartite-proper needs a, b >= 1")
        if fam == "exhaustive-enum" and not 1 <= self.n <= MAX_ENUM_N:
            raise SpecError(f"exhaustive-enum needs 1 <= n <= {MAX_ENUM_N}")
        if fam == "random-gnp" and (self.n < 1 or not 0.0 <= self.p <= 1.0 or self.count < 0):
            raise SpecError("random-gnp needs n >= 1, 0 <= p <= 1, count >= 0")
        if self.palette not in ("full", "half"):
            try:
                if int(self.palette) < 1:
                    raise ValueError
            except ValueError:
                raise SpecError(f"palette must be 'full', 'half' or a positive integer, got {self.palette!r}") from None
        if self.samples < 0:
            raise SpecError("samples must be >= 0")
        i, m = self.shard
        if m < 1 or not 0 <= i < m:
            raise SpecError(f"invalid shard {i}/{m}")

    @property
    def base_family(self) -> str:
        return self.base if self.family == "filtered" else self.family

    def predicates(self) -> list[str]:
        preds = []
        if self.triangle_free:
            preds.append("triangle-free")
        if self.rainbow_c4_free:
            preds.append("rainbow-C4-free")
        if self.min_delta_c is not None:
            preds.append(f"min-delta-c>={_fmt_frac(self.min_delta_c)}")
        return preds

    def to_string(self) -> str:
        """Canonical key=value form (defaults omitted)."""
        parts = []
        for f in fields(self):
            if f.name == "shard":
                if self.shard != (0, 1):
                    parts.append(f"shard={self.shard[0]}/{self.shard[1]}")
                continue
            v = getattr(self, f.name)
            if f.name != "family" and v == f.default:
                continue
            if isinstance(v, bool):
                v = int(v)
            elif isinstance(v, Fraction):
                v = _fmt_frac(v)
            parts.append(f"{f.name}={v}")
        return ",".join(parts)


def _fmt_frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_bool(s: str) -> bool:
    if s.lower() in ("1", "true", "yes"):
        return True
    if s.lower() in ("0", "false", "no"):
        return False
    raise ValueError(s)


_PARSERS = {
    "n": int,
    "p": float,
    "palette": str,
    "count": int,
    "seed": int,
    "samples": int,
    "min_degree": int,
    "a": int,
    "b": int,
    "base": str,
    "family": str,
    "triangle_free": _parse_bool,
    "rainbow_c4_free": _parse_bool,
    "min_delta_c": Fraction,
}


def _spec_from_pairs(pairs: Iterable[tuple[str, str]], **overrides) -> GenSpec:
    kw: dict = {}
    for key, value in pairs:
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key == "shard":
            try:
                i, m = value.split("/")
                kw["shard"] = (int(i), int(m))
            except ValueError:
                raise SpecError(f"shard must look like i/m, got {value!r}") from None
            continue
        if key not in _PARSERS:
            raise SpecError(f"unknown generator key {key!r}")
        try:
            kw[key] = _PARSERS[key](value)
        except (ValueError, ZeroDivisionError):
            raise SpecError(f"bad value for {key}: {value!r}") from None
    kw.update(overrides)
    if "family" not in kw:
        raise SpecError("generator spec needs family=<name>")
    return GenSpec(**kw)


def parse_genspec(text: str, **overrides) -> GenSpec:
    """Parse ``family=random-gnp,n=8,p=0.5,...``."""
    pairs = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise SpecError(f"expected key=value, got {item!r}")
        pairs.append(tuple(item.split("=", 1)))
    return _spec_from_pairs(pairs, **overrides)


def load_genspec(path, **overrides) -> GenSpec:
    """Read a config file of ``key = value`` lines (``#`` comments)."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SpecError(f"expected key = value, got {line!r}")
            pairs.append(tuple(line.split("=", 1)))
    return _spec_from_pairs(pairs, **overrides)


# --- families ------------------------------------------------------------


def proper_complete(n: int) -> EdgeColoredGraph:
    """K_n with the round-robin proper coloring (n-1 colors for even n, n for odd n)."""
    if n < 2:
        raise SpecError("complete-proper needs n >= 2")
    m = n if n % 2 == 0 else n + 1
    r = m - 1
    edges = []
    for u, v in combinations(range(n), 2):
        if v == m - 1:
            c = (2 * u) % r
        else:
            c = (u + v) % r
        edges.append((u, v, c))
    return EdgeColoredGraph(n, edges)


def proper_complete_bipartite(a: int, b: int) -> EdgeColoredGraph:
    q = max(a, b)
    return EdgeColoredGraph(a + b, [(i, a + j, (i + j) % q) for i in range(a) for j in range(b)])


def rainbow_cycle_graph(n: int) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, [(i, (i + 1) % n, i) for i in range(n)])


def _palette_size(palette: str, m: int) -> int:
    if palette == "full":
        return max(1, m)
    if palette == "half":
        return max(1, m // 2)
    return int(palette)


def _random_gnp(spec: GenSpec) -> Iterator[tuple[int, EdgeColoredGraph]]:
    pairs = list(combinations(range(spec.n), 2))
    for i in range(spec.count):
        if not _in_shard(spec, i):
            continue
        rng = random.Random(derive_seed(spec.seed, "gnp", i))
        chosen = [e for e in pairs if rng.random() < spec.p]
        q = _palette_size(spec.palette, len(chosen))
        yield i, EdgeColoredGraph(spec.n, [(u, v, rng.randrange(q)) for u, v in chosen])


def _masks_min_degree(n: int, d: int) -> Iterator[int]:
    """Edge masks (ascending) of labeled graphs with minimum degree >= d."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    if d <= 0:
        yield from range(1 << m)
        return
    if d > n - 1:
        return
    deg = [0] * n
    left = [n - 1] * n  # undecided pairs at each vertex

    def rec(i: int, mask: int):
        if i < 0:
            yield mask
            return
        u, v = pairs[i]
        left[u] -= 1
        left[v] -= 1
        if deg[u] + left[u] >= d and deg[v] + left[v] >= d:
            yield from rec(i - 1, mask)
        deg[u] += 1
        deg[v] += 1
        yield from rec(i - 1, mask | 1 << i)
        deg[u] -= 1
        deg[v] -= 1
        left[u] += 1
        left[v] += 1

    yield from rec(m - 1, 0)


def _exhaustive(spec: GenSpec) -> Iterator[tuple[int, EdgeColoredGraph]]:
    n = spec.n
    pairs = list(combinations(range(n), 2))
    d = spec.min_degree
    if spec.min_delta_c is not None:
        # color degree never exceeds degree
        d = max(d, math.ceil(spec.min_delta_c))
    from_dense = EdgeColoredGraph.from_dense
    for rank, mask in enumerate(_masks_min_degree(n, d)):
        if not _in_shard(spec, rank):
            continue
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        m = len(edges)
        base = mask * (spec.samples + 2)
        yield base, from_dense(n, edges, (0,) * m)
        if m >= 2:
            yield base + 1, from_dense(n, edges, tuple(range(m)))
        if spec.samples and m:
            rng = random.Random(derive_seed(spec.seed, "enum", n, mask))
            for j in range(spec.samples):
                q = rng.randint(1, m)
                labels = [rng.randrange(q) for _ in range(m)]
                intern: dict[int, int] = {}
                colors = tuple(intern.setdefault(x, len(intern)) for x in labels)
                yield base + 2 + j, from_dense(n, edges, colors)


def _in_shard(spec: GenSpec, index: int) -> bool:
    i, m = spec.shard
    return m == 1 or (index // SHARD_BLOCK) % m == i


def generate_indexed(spec: GenSpec) -> Iterator[tuple[int, EdgeColoredGraph]]:
    """``(item_index, graph)`` pairs; indices are stable across shards."""
    fam = spec.base_family
    if fam == "random-gnp":
        stream = _random_gnp(spec)
    elif fam == "exhaustive-enum":
        stream = _exhaustive(spec)
    elif fam == "complete-proper":
        stream = iter([(0, proper_complete(spec.n))] if _in_shard(spec, 0) else [])
    elif fam == "complete-bipartite-proper":
        stream = iter([(0, proper_complete_bipartite(spec.a, spec.b))] if _in_shard(spec, 0) else [])
    elif fam == "cycle":
        stream = iter([(0, rainbow_cycle_graph(spec.n))] if _in_shard(spec, 0) else [])
    else:  # pragma: no cover - rejected by GenSpec
        raise SpecError(fam)
    preds = spec.predicates()
    if not preds:
        return stream
    return ((i, cg.graph) for i, cg in _filter_indexed(stream, preds))


def generate(spec: GenSpec) -> Iterator[EdgeColoredGraph]:
    return (g for _, g in generate_indexed(spec))


@dataclass(frozen=True)
class CertifiedGraph:
    graph: EdgeColoredGraph
    certificates: dict = field(default_factory=dict)


def _check(g: EdgeColoredGraph, predicate: str):
    """(passes, certificate) for one predicate."""
    if predicate == "triangle-free":
        ok = is_triangle_free(g)
        return ok, ok
    if predicate == "rainbow-C4-free":
        cert = certify_c4(g)
        return cert.found is None, cert
    if predicate.startswith("min-delta-c>="):
        q = Fraction(predicate.split(">=", 1)[1])
        delta = min_color_degree(g) if g.n else 0
        return delta >= q, delta
    raise SpecError(f"unknown predicate {predicate!r}")


def _validate_predicate(predicate: str) -> None:
    if predicate in ("triangle-free", "rainbow-C4-free"):
        return
    if predicate.startswith("min-delta-c>="):
        try:
            Fraction(predicate.split(">=", 1)[1])
            return
        except (ValueError, ZeroDivisionError):
            pass
    raise SpecError(f"unknown predicate {predicate!r}")


def _filter_indexed(stream, predicates: list[str]):
    for i, item in stream:
        if isinstance(item, CertifiedGraph):
            g, certs = item.graph, dict(item.certificates)
        else:
            g, certs = item, {}
        for pred in predicates:
            ok, cert = _check(g, pred)
            if not ok:
                break
            certs[pred] = cert
        else:
            yield i, CertifiedGraph(g, certs)


def filter_certified(stream: Iterable, predicate: str) -> Iterator[CertifiedGraph]:
    """Pass the graphs satisfying ``predicate``, each with its certificate.

    ``predicate`` is ``triangle-free``, ``rainbow-C4-free`` or
    ``min-delta-c>=q`` (q an exact rational such as ``7/2``).
    """
    _validate_predicate(predicate)
    return (cg for _, cg in _filter_indexed(enumerate(stream), [predicate]))


def with_shard(spec: GenSpec, i: int, m: int) -> GenSpec:
    return replace(spec, shard=(i, m))
