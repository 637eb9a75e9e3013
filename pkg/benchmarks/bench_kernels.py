"""Time the compiled and numpy word-count kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wordlab import backend
from wordlab.catalog import catalog_group
from wordlab.words import compile_word, parse_word

CASES = [
    ("A5", "[x1,x2,x3]"),
    ("S4", "[[x1,x2],[x3,x4]]"),
    ("PSL(2,7)", "[x1^2,x2]^3"),
    ("S5", "x1^2 x2^3 [x1,x2]"),
    ("A5", "[[x1,x2],[x3,x4]]"),
]


def bench(fn, G, program, tables, nvars, repeat):
    total = G.order ** nvars
    best = float("inf")
    counts = None
    for _ in range(repeat):
        counts = np.zeros(G.order, dtype=np.int64)
        t0 = time.perf_counter()
        fn(G.mul, G.inv, tables, program, nvars, 0, total, counts)
        best = min(best, time.perf_counter() - t0)
    return best, counts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    impls = backend.implementations()
    print(f"default backend: {backend.NAME}; available: {', '.join(impls)}")
    header = f"{'group':<10} {'word':<22} {'evals':>10}" + "".join(f" {n + ' s':>11}" for n in impls)
    if len(impls) > 1:
        header += f" {'speedup':>8}"
    print(header)
    for name, text in CASES:
        G = catalog_group(name)
        w = parse_word(text)
        program, tables = compile_word(G, w)
        times = {}
        results = []
        for impl, fn in impls.items():
            t, counts = bench(fn, G, program, tables, w.arity, args.repeat)
            times[impl] = t
            results.append(counts)
        assert all(np.array_equal(results[0], r) for r in results[1:]), "kernels disagree"
        row = f"{name:<10} {text:<22} {G.order ** w.arity:>10}" + "".join(f" {times[n]:>11.4f}" for n in impls)
        if len(impls) > 1:
            row += f" {times['numpy'] / times['cython']:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
