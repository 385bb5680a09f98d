#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two hot kernels (canonical labeling and isomorphism search) over
seeded random graph workloads with each available backend and prints a
timing table.  Usage::

    python3 benchmarks/bench_kernels.py [--sizes 8 12 16] [--repeat 3]
"""

import argparse
import random
import statistics
import time

from amplify.isomorph import _refined_colors
from amplify.kernels import backends
from amplify.graphs import AmplifiedGraph, apply_permutation


def candidate_masks(g, h):
    """Refinement-derived per-vertex image masks, as the iso search uses."""
    refined = _refined_colors(g, h)
    if refined is None:
        return None
    col_g, col_h = refined
    n = g.vertex_count
    return [
        sum(1 << w for w in range(n) if col_h[w] == col_g[v]) for v in range(n)
    ]


def random_rows(rng, n, density=0.3):
    return tuple(
        sum(1 << w for w in range(n) if rng.random() < density) for _ in range(n)
    )


def make_workloads(sizes, per_size=20, seed=7):
    rng = random.Random(seed)
    canon, iso = [], []
    for n in sizes:
        for _ in range(per_size):
            rows = random_rows(rng, n)
            canon.append((n, rows))
            g = AmplifiedGraph(tuple(f"v{i}" for i in range(n)), rows)
            perm = list(range(n))
            rng.shuffle(perm)
            h = apply_permutation(g, perm)
            cands = candidate_masks(g, h)
            if cands is None:  # refinement alone refuted; nothing to search
                continue
            iso.append((n, rows, h.rows, cands))
    return canon, iso


def time_backend(fn, calls, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        for args in calls:
            fn(*args)
        samples.append(time.perf_counter() - start)
    return min(samples), statistics.mean(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--per-size", type=int, default=20)
    args = parser.parse_args()

    canon, iso = make_workloads(args.sizes, args.per_size)
    kernels = backends()
    print(f"backends: {', '.join(kernels)}")
    print(f"workload: {len(canon)} canonical-labeling calls, "
          f"{len(iso)} isomorphism searches (sizes {args.sizes})")
    print()
    print(f"{'kernel':<20} {'backend':<8} {'best (s)':>10} {'mean (s)':>10}")
    print("-" * 52)
    results = {}
    for name, mod in kernels.items():
        best, mean = time_backend(mod.canonical_perm, canon, args.repeat)
        results[("canonical_perm", name)] = best
        print(f"{'canonical_perm':<20} {name:<8} {best:>10.4f} {mean:>10.4f}")
        best, mean = time_backend(mod.find_isomorphism, iso, args.repeat)
        results[("find_isomorphism", name)] = best
        print(f"{'find_isomorphism':<20} {name:<8} {best:>10.4f} {mean:>10.4f}")
    if len(kernels) == 2:
        print()
        for kernel in ("canonical_perm", "find_isomorphism"):
            ratio = results[(kernel, "pure")] / results[(kernel, "cython")]
            print(f"{kernel}: cython is {ratio:.1f}x faster than pure")


if __name__ == "__main__":
    main()
