#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure numpy fallback.

Runs the two hot kernels on representative workloads, checks that both
backends return identical results, and prints a timing table:

    python3 benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from groupcodes import _purekern
from groupcodes.ffield import parse_field_spec

try:
    from groupcodes import _fastkern
except ImportError:
    _fastkern = None


def _matrices(rng, q, m, n, count):
    return [
        np.ascontiguousarray(
            [[rng.randrange(q) for _ in range(n)] for _ in range(m)], dtype=np.int16
        )
        for _ in range(count)
    ]


def bench_rref(impl, mats, tables):
    start = time.perf_counter()
    ranks = []
    for mat in mats:
        work = mat.copy()
        ranks.append(impl.rref_inplace(work, tables.add, tables.mul, tables.neg, tables.inv))
    return time.perf_counter() - start, ranks


def bench_weights(impl, gen, q, tables):
    start = time.perf_counter()
    counts = impl.weight_distribution(gen, q, tables.add, tables.mul)
    return time.perf_counter() - start, counts.tolist()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()

    if _fastkern is None:
        print("compiled backend not built; showing pure-python times only")

    rng = random.Random(1)
    jobs = []

    # rref: the automorphism-search shape (many tiny reductions) and a
    # larger ideal-closure shape
    for q_text, m, n, count in [("2", 3, 7, 4000), ("3", 3, 7, 4000), ("9", 12, 24, 400)]:
        spec = parse_field_spec(q_text)
        mats = _matrices(rng, spec.q, m, n, count)
        jobs.append((f"rref      q={spec.q} {m}x{n} x{count}",
                     lambda impl, s=spec, ms=mats: bench_rref(impl, ms, s.tables())))

    # weight enumeration near the desk-scale cap
    for q_text, k, n in [("2", 16, 24), ("3", 10, 30), ("4", 8, 20)]:
        spec = parse_field_spec(q_text)
        gen = np.ascontiguousarray(
            [[rng.randrange(spec.q) for _ in range(n)] for _ in range(k)],
            dtype=np.int16,
        )
        jobs.append((f"weights   q={spec.q} k={k} n={n} ({spec.q ** k} words)",
                     lambda impl, s=spec, g=gen: bench_weights(impl, g, s.q, s.tables())))

    width = max(len(name) for name, _ in jobs)
    header = f"{'workload':<{width}}  {'pure (s)':>10}"
    if _fastkern is not None:
        header += f"  {'cython (s)':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, runner in jobs:
        pure_time, pure_out = min(
            (runner(_purekern) for _ in range(args.repeats)), key=lambda r: r[0]
        )
        line = f"{name:<{width}}  {pure_time:>10.4f}"
        if _fastkern is not None:
            fast_time, fast_out = min(
                (runner(_fastkern) for _ in range(args.repeats)), key=lambda r: r[0]
            )
            if fast_out != pure_out:
                raise SystemExit(f"backend results differ on: {name}")
            line += f"  {fast_time:>10.4f}  {pure_time / fast_time:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
