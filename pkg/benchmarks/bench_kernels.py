"""Time the compiled search kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends expand the same search nodes, so the node counts are printed
once and only wall time differs.
"""

import argparse
import time

from rainbowlab import kernels, longest_rainbow_cycle, longest_rainbow_path
from rainbowlab.generators import GenSpec, generate


def gnp(n, p, palette, seed):
    return next(generate(GenSpec("random-gnp", n=n, p=p, palette=palette, count=1, seed=seed)))


CASES = [
    ("path, gnp n=18 p=0.2", lambda: gnp(18, 0.2, "full", 1), longest_rainbow_path),
    ("path, gnp n=20 p=0.3", lambda: gnp(20, 0.3, "half", 1), longest_rainbow_path),
    ("cycle, gnp n=20 p=0.3", lambda: gnp(20, 0.3, "half", 1), longest_rainbow_cycle),
    ("cycle, gnp n=24 p=0.15", lambda: gnp(24, 0.15, "full", 1), longest_rainbow_cycle),
]


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'case':<24}{'nodes':>12}{'compiled s':>12}{'python s':>12}{'speedup':>9}")
    for name, make, search in CASES:
        g = make()
        fast, res_c = best_time(lambda: search(g, backend="compiled"), args.repeat)
        slow, res_p = best_time(lambda: search(g, backend="python"), args.repeat)
        assert (res_c.best_length, res_c.nodes_expanded) == (res_p.best_length, res_p.nodes_expanded)
        print(f"{name:<24}{res_c.nodes_expanded:>12}{fast:>12.4f}{slow:>12.4f}{slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
