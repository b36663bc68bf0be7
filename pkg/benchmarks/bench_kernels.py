"""Compare the compiled and pure-Python kernels on representative workloads.

Run with ``python benchmarks/bench_kernels.py [--repeat R]``. Each workload
is timed on every available backend and the results are checked for equality.
"""

from __future__ import annotations

import argparse
import random
import time

from sepcodes import _kernels
from sepcodes.bounds import triple_set
from sepcodes.core import CodeParams, index_to_word, onehot


def _packed(q: int, n: int, N: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    return [onehot(tuple(rng.randrange(q) for _ in range(n)), q) for _ in range(N)]


def _space(q: int, n: int) -> tuple[list[int], list[int]]:
    """All of F^n packed, plus the binary words that may follow the zero word."""
    p = CodeParams(q, n)
    words = [index_to_word(i, p) for i in range(p.space_size)]
    seconds = [i for i, w in enumerate(words) if i and max(w) <= 1]
    return [onehot(w, q) for w in words], seconds


def workloads():
    sep = _packed(8, 6, 40, 1)
    t2 = _packed(4, 3, 24, 2)
    gen = _packed(4, 3, 11, 3)
    triples = triple_set(3).triples
    space, seconds = _space(3, 3)
    return {
        "separable_candidates m=40 t=3": lambda k: k.separable_candidates(sep, 3, False),
        "t2_events N=24": lambda k: k.t2_events(t2),
        "general_events N=11 t=3": lambda k: k.general_events(gen, 3, 3, triples),
        "search (3,3,2) separable": lambda k: [
            k.search_branch(space, 2, True, s, 10)[0] for s in seconds
        ],
    }


def best_of(fn, kern, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(kern)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    kernels = _kernels.backends()
    print(f"backends: {', '.join(sorted(kernels))}")
    print(f"{'workload':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in workloads().items():
        py_time, py_res = best_of(fn, kernels["python"], args.repeat)
        if "cython" in kernels:
            cy_time, cy_res = best_of(fn, kernels["cython"], args.repeat)
            if cy_res != py_res:
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:34s} {py_time:10.4f} {cy_time:10.4f} {py_time / cy_time:7.1f}x")
        else:
            print(f"{name:34s} {py_time:10.4f} {'n/a':>10s} {'n/a':>8s}")


if __name__ == "__main__":
    main()
